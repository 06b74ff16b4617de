#include "graphcurv/level_surface.hpp"

#include <algorithm>
#include <string>

#include <json.hpp>

#include "graphcurv/cliques.hpp"
#include "graphcurv/errors.hpp"
#include "graphcurv/euler.hpp"

namespace graphcurv {
namespace {

std::size_t surface_index(const std::vector<Edge>& cut, Vertex a, Vertex b) {
  const Edge key{std::min(a, b), std::max(a, b)};
  const auto it = std::lower_bound(cut.begin(), cut.end(), key);
  if (it == cut.end() || *it != key) throw ConsistencyError("edge is not a surface vertex");
  return static_cast<std::size_t>(it - cut.begin());
}

// Level surface of g at threshold c in g's own vertex ids.
LevelSurface build_level(const Graph& g, std::span<const double> values, double c) {
  LevelSurface s;
  s.threshold = c;
  auto below = [&](Vertex v) { return values[v] < c; };
  for (const Edge& e : g.edges()) {
    if (below(e.u) != below(e.v)) s.surface_vertices.push_back(e);
  }
  std::vector<Edge> graph_edges;
  for (const Edge& e : g.edges()) {
    for (Vertex w : g.neighbors(e.v)) {
      if (w <= e.v || !g.adjacent(e.u, w)) continue;
      const std::array<Vertex, 3> t{e.u, e.v, w};
      const int low = below(t[0]) + below(t[1]) + below(t[2]);
      if (low == 0 || low == 3) continue;
      std::vector<std::size_t> cut;
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          if (below(t[i]) != below(t[j])) cut.push_back(surface_index(s.surface_vertices, t[i], t[j]));
        }
      }
      if (cut.size() != 2) throw ConsistencyError("mixed triangle without exactly two sign changes");
      s.surface_edges.push_back(t);
      graph_edges.push_back({static_cast<Vertex>(cut[0]), static_cast<Vertex>(cut[1])});
    }
  }
  // Triangles were produced in lexicographic order already (u < v < w scan).
  s.graph = Graph::from_edges(s.surface_vertices.size(), graph_edges);
  return s;
}

void check_threshold(const VertexFunction& f, double c) {
  for (double v : f.values()) {
    if (v == c) throw InputError("threshold equals a value of the function");
  }
}

}  // namespace

LevelSurface hypersurface(const Graph& g, const VertexFunction& f, double c) {
  if (f.size() != g.order()) throw InputError("vertex function does not match graph order");
  check_threshold(f, c);
  return build_level(g, f.values(), c);
}

CenterSurfaces::CenterSurfaces(const Graph& g) : host_(&g) {
  spheres_.reserve(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    spheres_.push_back(unit_sphere(g, x));
    dims_.push_back(geometric_dimension(spheres_.back().graph));
    sphere_chi_.push_back(euler_characteristic(spheres_.back().graph));
  }
}

CompletedSurface CenterSurfaces::build(const VertexFunction& f, Vertex x, Completion mode) const {
  const Graph& g = *host_;
  if (f.size() != g.order()) throw InputError("vertex function does not match graph order");
  require_vertex(g, x);
  const Subgraph& sphere = spheres_[x];
  const Graph& s = sphere.graph;
  const double c = f[x];

  std::vector<double> local(s.order());
  for (std::size_t i = 0; i < s.order(); ++i) local[i] = f[sphere.to_host[i]];
  LevelSurface raw = build_level(s, local, c);

  CompletedSurface out;
  out.sphere_dimension = dims_[x];
  out.completed = dims_[x].has_value() && *dims_[x] <= 3;

  std::vector<Edge> edges = raw.graph.edges();
  std::size_t order = raw.graph.order();
  if (out.completed && *dims_[x] == 3) {
    const auto tets = enumerate_cliques(s, 3);
    if (tets.cliques.by_dimension.size() > 3) {
      for (const auto& t : tets.cliques.by_dimension[3]) {
        std::vector<Vertex> lo, hi;
        for (Vertex v : t) (local[v] < c ? lo : hi).push_back(v);
        if (lo.size() != 2) continue;
        const auto q11 = static_cast<Vertex>(surface_index(raw.surface_vertices, lo[0], hi[0]));
        const auto q12 = static_cast<Vertex>(surface_index(raw.surface_vertices, lo[0], hi[1]));
        const auto q21 = static_cast<Vertex>(surface_index(raw.surface_vertices, lo[1], hi[0]));
        const auto q22 = static_cast<Vertex>(surface_index(raw.surface_vertices, lo[1], hi[1]));
        if (raw.graph.adjacent(q11, q22) || raw.graph.adjacent(q12, q21)) {
          throw ConsistencyError("quadrilateral from a 2-2 split has a chord");
        }
        CompletionCell cell;
        for (std::size_t i = 0; i < 4; ++i) cell.tetrahedron[i] = sphere.to_host[t[i]];
        switch (mode) {
          case Completion::stellation: {
            const auto apex = static_cast<Vertex>(order++);
            cell.vertex = apex;
            for (Vertex q : {q11, q12, q21, q22}) edges.push_back({q, apex});
            break;
          }
          case Completion::chord_first:
            edges.push_back({q11, q22});
            break;
          case Completion::chord_second:
            edges.push_back({q12, q21});
            break;
        }
        out.added_cells.push_back(cell);
      }
    }
  }
  out.graph = Graph::from_edges(order, edges);

  // Report the raw surface in host ids; to_host is increasing so order holds.
  for (Edge& e : raw.surface_vertices) e = {sphere.to_host[e.u], sphere.to_host[e.v]};
  for (auto& t : raw.surface_edges) {
    for (Vertex& v : t) v = sphere.to_host[v];
  }
  out.raw = std::move(raw);

  const auto expected = euler_characteristic(out.raw.graph) + static_cast<std::int64_t>(out.added_cells.size());
  if (out.completed && euler_characteristic(out.graph) != expected) {
    throw ConsistencyError("completion changed chi by other than one per cell");
  }
  return out;
}

CompletedSurface center_surface(const Graph& g, const VertexFunction& f, Vertex x, Completion mode) {
  return CenterSurfaces(g).build(f, x, mode);
}

GenusLemmaRecord genus_lemma_check(const CenterSurfaces& surfaces, const VertexFunction& f, Vertex x,
                                   std::size_t dimension) {
  GenusLemmaRecord r;
  r.vertex = x;
  r.symmetric_index = symmetric_index(surfaces.host(), f, x);
  r.sphere_chi = surfaces.sphere_characteristic(x);
  r.surface_chi = euler_characteristic(surfaces.build(f, x).graph);
  const Rational rhs = Rational(1) - make_rational(r.sphere_chi, 2) - make_rational(r.surface_chi, 2);
  r.index_formula_holds = r.symmetric_index == rhs;
  if (dimension == 4) r.genus_form_holds = Rational(r.surface_chi) == 2 - 2 * r.symmetric_index;
  return r;
}

GenusLemmaRecord genus_lemma_check(const Graph& g, const VertexFunction& f, Vertex x,
                                   std::size_t dimension) {
  return genus_lemma_check(CenterSurfaces(g), f, x, dimension);
}

std::int64_t glued_surface_characteristic(const CenterSurfaces& surfaces, const VertexFunction& f) {
  const Graph& g = surfaces.host();
  if (!is_geometric(g, 4).is_geometric) {
    throw DomainError("glued surface characteristic requires a 4-dimensional geometric graph");
  }
  Rational genus_sum = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    genus_sum += Rational(1) - make_rational(euler_characteristic(surfaces.build(f, x).graph), 2);
  }
  const std::int64_t chi = euler_characteristic(g);
  if (genus_sum != chi) {
    throw ConsistencyError("genus additivity failed: sum of surface genera " + to_string(genus_sum) +
                           " != chi " + std::to_string(chi));
  }
  return 2 - 2 * chi;
}

std::int64_t glued_surface_characteristic(const Graph& g, const VertexFunction& f) {
  return glued_surface_characteristic(CenterSurfaces(g), f);
}

std::int64_t sectional_total_curvature(const Graph& g, const VertexFunction& f, Vertex x) {
  return euler_characteristic(center_surface(g, f, x).graph);
}

std::string to_json(const CompletedSurface& s) {
  using nlohmann::json;
  json edges = json::array(), vertices = json::array(), cells = json::array();
  for (const Edge& e : s.graph.edges()) edges.push_back({e.u, e.v});
  for (const Edge& e : s.raw.surface_vertices) vertices.push_back({e.u, e.v});
  for (const auto& c : s.added_cells) {
    cells.push_back({{"vertex", c.vertex}, {"tetrahedron", c.tetrahedron}});
  }
  json doc{{"n", s.graph.order()},
           {"edges", edges},
           {"surface_vertices", vertices},
           {"cells", cells},
           {"completed", s.completed}};
  return doc.dump();
}

}  // namespace graphcurv
