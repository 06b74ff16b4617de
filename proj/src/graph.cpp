#include "graphcurv/graph.hpp"

#include <algorithm>
#include <string>

#include "graphcurv/errors.hpp"

namespace graphcurv {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.n_ = n;
  g.words_ = words_for(n);
  g.bits_.assign(n * g.words_, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") references a vertex outside 0.." +
                       (n == 0 ? std::string("(empty)") : std::to_string(n - 1)));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    g.bits_[e.u * g.words_ + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
    g.bits_[e.v * g.words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t d = 0;
    for (std::size_t w = 0; w < g.words_; ++w) d += static_cast<std::size_t>(std::popcount(g.bits_[v * g.words_ + w]));
    g.offsets_[v + 1] = g.offsets_[v] + d;
  }
  g.adjacency_.reserve(g.offsets_[n]);
  for (std::size_t v = 0; v < n; ++v) {
    for_each_bit(g.row(static_cast<Vertex>(v)), [&](Vertex u) { g.adjacency_.push_back(u); });
  }
  g.edge_count_ = g.offsets_[n] / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != n_) {
    throw InputError("label count " + std::to_string(labels.size()) + " does not match order " +
                     std::to_string(n_));
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(g.order()));
  }
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> vs(subset.begin(), subset.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (Vertex v : vs) require_vertex(g, v);

  std::vector<Vertex> local(g.order(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (Vertex u : g.neighbors(vs[i])) {
      if (u > vs[i] && std::binary_search(vs.begin(), vs.end(), u)) {
        edges.push_back({static_cast<Vertex>(i), local[u]});
      }
    }
  }
  Subgraph out{Graph::from_edges(vs.size(), edges), std::move(vs)};
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    labels.reserve(out.to_host.size());
    for (Vertex v : out.to_host) labels.push_back(g.labels()[v]);
    out.graph = out.graph.with_labels(std::move(labels));
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& subset) {
  const auto vs = subset.to_vector();
  return induced_subgraph(g, std::span<const Vertex>(vs));
}

Subgraph unit_sphere(const Graph& g, Vertex v) {
  require_vertex(g, v);
  return induced_subgraph(g, g.neighbors(v));
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

}  // namespace graphcurv
