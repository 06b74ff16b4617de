#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"

namespace graphcurv {

/// chi(G) as the alternating sum of the clique f-vector.
std::int64_t euler_characteristic(const Graph& g);
std::int64_t euler_characteristic(const Graph& g, const VertexSet& subset);

/// chi(G) by recursive Poincare-Hopf: chi(H) = sum_x (1 - chi(S^-(x) within H))
/// where S^-(x) holds the neighbors ranked below x. Without a seed the rank is
/// the vertex id; with a seed the rank is a seeded random permutation.
std::int64_t euler_characteristic_ph(const Graph& g,
                                     std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Same engine with an explicit ranking; rank must be a permutation of 0..n-1.
std::int64_t euler_characteristic_ph(const Graph& g, std::span<const std::uint32_t> rank);

/// Same engine on the subgraph induced by subset.
std::int64_t euler_characteristic_ph(const Graph& g, const VertexSet& subset,
                                     std::span<const std::uint32_t> rank);

enum class GeometricDefect {
  empty_graph,           // no vertices at all
  has_edges,             // dimension 0 requires an edgeless graph
  sphere_not_geometric,  // S(x) fails the (d-1)-dimensional test
  sphere_characteristic  // chi(S(x)) != 1 - (-1)^d
};

std::string_view describe(GeometricDefect d) noexcept;

struct GeometricWitness {
  std::optional<Vertex> vertex;  // empty for whole-graph defects
  GeometricDefect defect;
  friend bool operator==(const GeometricWitness&, const GeometricWitness&) = default;
};

struct GeometricReport {
  std::size_t claimed_dimension = 0;
  bool is_geometric = false;
  /// First offending vertex for each defect class found; empty iff geometric.
  std::vector<GeometricWitness> witnesses;
};

/// Dimension-d geometric test: d = 0 means nonempty and edgeless; d >= 1 means
/// nonempty and every unit sphere is (d-1)-geometric with chi = 1 - (-1)^d.
GeometricReport is_geometric(const Graph& g, std::size_t d);

/// The d for which g is geometric, if any. Only the clique dimension needs
/// to be tried, since a d-geometric graph has top simplices of dimension d.
std::optional<std::size_t> geometric_dimension(const Graph& g);

/// 1 - chi(G)/2; half-integers are allowed.
Rational genus(const Graph& g);

/// chi(G) * (number of spanning trees). Throws DomainError when g is
/// disconnected or empty.
Rational tree_functional(const Graph& g);

}  // namespace graphcurv
