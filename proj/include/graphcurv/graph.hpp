#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "graphcurv/bitset.hpp"

namespace graphcurv {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable finite simple graph on vertices 0..n-1.
///
/// Adjacency is held twice: as packed bit rows for set algebra and as sorted
/// neighbor lists for iteration. Both are built once in from_edges().
class Graph {
 public:
  Graph() = default;

  /// Builds the graph with exactly the given edges. Duplicates and
  /// orientation are collapsed. Throws InputError on a self-loop or an
  /// endpoint >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  /// Words per adjacency row.
  std::size_t words() const noexcept { return words_; }

  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  bool contains(Vertex v) const noexcept { return v < n_; }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Optional vertex labels; empty when the graph is unlabeled.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  /// Same order and edge set; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<std::string> labels_;
};

/// A graph carved out of a host, with to_host[i] the host id of vertex i.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;
};

/// Induced subgraph on the given host vertices. The subset is sorted and
/// deduplicated first, so vertex i of the result is the i-th smallest id.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);
Subgraph induced_subgraph(const Graph& g, const VertexSet& subset);

/// Induced subgraph on the neighbors of v.
Subgraph unit_sphere(const Graph& g, Vertex v);

bool is_connected(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Throws InputError unless v < g.order().
void require_vertex(const Graph& g, Vertex v);

}  // namespace graphcurv
