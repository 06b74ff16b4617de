#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphcurv/graph.hpp"
#include "graphcurv/morse.hpp"
#include "graphcurv/rational.hpp"

namespace graphcurv {

/// Discrete level set {f = c}: one vertex per host edge on which f - c changes
/// sign, one edge per host triangle with mixed signs (such a triangle has
/// exactly two sign-changing edges).
struct LevelSurface {
  double threshold = 0.0;
  /// Host edges {u, v}, u < v, lexicographically sorted. Surface vertex i is
  /// surface_vertices[i].
  std::vector<Edge> surface_vertices;
  /// Host triangles (sorted ids), lexicographically sorted; surface edge i
  /// joins the two sign-changing edges of surface_edges[i].
  std::vector<std::array<Vertex, 3>> surface_edges;
  Graph graph;
};

/// Throws InputError when c equals some value of f or f does not match g.
LevelSurface hypersurface(const Graph& g, const VertexFunction& f, double c);

enum class Completion {
  stellation,  // one new vertex coned over each 2-2 quadrilateral
  chord_first,  // diagonal {a1 b1, a2 b2}, a1 < a2 below, b1 < b2 above
  chord_second  // diagonal {a1 b2, a2 b1}
};

struct CompletionCell {
  /// Stellation vertex id in the completed graph; unused for chord modes.
  Vertex vertex = 0;
  /// Host ids of the 2-2 split tetrahedron, sorted.
  std::array<Vertex, 4> tetrahedron{};
};

/// B_f(x): the level surface of S(x) at threshold f(x), completed across the
/// quadrilaterals cut out of 2-2 split tetrahedra. Surface vertex and edge
/// lists use host ids.
struct CompletedSurface {
  LevelSurface raw;
  std::vector<CompletionCell> added_cells;
  Graph graph;
  /// Geometric dimension of S(x), when it has one.
  std::optional<std::size_t> sphere_dimension;
  /// False when S(x) is not geometric of dimension <= 3; graph is then raw.
  bool completed = false;
};

/// Builds center surfaces for one host graph, caching each unit sphere and
/// its geometric dimension across repeated functions.
class CenterSurfaces {
 public:
  explicit CenterSurfaces(const Graph& g);

  CompletedSurface build(const VertexFunction& f, Vertex x,
                         Completion mode = Completion::stellation) const;

  const Graph& host() const noexcept { return *host_; }
  const Subgraph& sphere(Vertex x) const { return spheres_[x]; }
  std::optional<std::size_t> sphere_dimension(Vertex x) const { return dims_[x]; }
  std::int64_t sphere_characteristic(Vertex x) const { return sphere_chi_[x]; }

 private:
  const Graph* host_;
  std::vector<Subgraph> spheres_;
  std::vector<std::optional<std::size_t>> dims_;
  std::vector<std::int64_t> sphere_chi_;
};

CompletedSurface center_surface(const Graph& g, const VertexFunction& f, Vertex x,
                                Completion mode = Completion::stellation);

struct GenusLemmaRecord {
  Vertex vertex = 0;
  Rational symmetric_index;         // j_f(x) from the morse engine
  std::int64_t sphere_chi = 0;      // chi(S(x))
  std::int64_t surface_chi = 0;     // chi(B_f(x))
  bool index_formula_holds = false; // j = 1 - chi(S)/2 - chi(B)/2
  /// For dimension 4 only: chi(B) = 2 - 2 j.
  std::optional<bool> genus_form_holds;
  bool holds() const noexcept { return index_formula_holds && genus_form_holds.value_or(true); }
};

/// Compares j_f(x) against the surface side of the index formula. Mismatches
/// are reported in the record, never thrown. dimension is the caller's
/// geometric dimension of g.
GenusLemmaRecord genus_lemma_check(const CenterSurfaces& surfaces, const VertexFunction& f, Vertex x,
                                   std::size_t dimension);
GenusLemmaRecord genus_lemma_check(const Graph& g, const VertexFunction& f, Vertex x,
                                   std::size_t dimension);

/// chi of the surface glued from all B_f(x), via genus additivity:
/// g = sum_x (1 - chi(B_f(x))/2), result 2 - 2g. Throws DomainError unless g
/// is 4-dimensional geometric, ConsistencyError if g != chi(G).
std::int64_t glued_surface_characteristic(const Graph& g, const VertexFunction& f);
std::int64_t glued_surface_characteristic(const CenterSurfaces& surfaces, const VertexFunction& f);

/// K(x, f) = chi(B_f(x)), the total curvature of the local random surface;
/// 1 - K(x, f)/2 = j_f(x) on 4-dimensional hosts.
std::int64_t sectional_total_curvature(const Graph& g, const VertexFunction& f, Vertex x);

/// JSON graph format plus "surface_vertices", "cells" and "completed".
std::string to_json(const CompletedSurface& s);

}  // namespace graphcurv
