#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"

namespace graphcurv::gen {

Graph edgeless(std::size_t n);
Graph cycle(std::size_t n);  // n >= 3
Graph path(std::size_t n);   // n >= 1
Graph complete(std::size_t n);
Graph complete_multipartite(std::span<const std::size_t> part_sizes);
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Center 0 with k rays 1..k.
Graph star(std::size_t k);
/// Center 0 joined to the rim cycle 1..n; n >= 3.
Graph wheel(std::size_t n);
/// Boundary of the (d+1)-dimensional cross-polytope: d+1 parts {2i, 2i+1}
/// of size 2, every cross-part pair adjacent. d = 2 is the octahedron.
Graph cross_polytope(std::size_t d);
Graph octahedron();
Graph icosahedron();
/// Two triangles {0,1,2} and {0,1,3} sharing the edge {0,1}.
Graph kite();
/// Two star centers 0 and 1 glued along k common rays: K_{2,k}.
Graph two_star(std::size_t k);
/// a x b grid wrapped on both axes with the diagonal (i,j)-(i+1,j+1) in every
/// square. Vertex (i, j) has id i*b + j. Requires a, b >= 4.
Graph torus_triangulation(std::size_t a, std::size_t b);
/// Each pair u < v present independently with probability p, decided by
/// counter_hash(seed, u, v) so the result does not depend on visiting order.
Graph erdos_renyi(std::size_t n, const Rational& p, std::uint64_t seed);

/// Builds a graph from a generator expression such as "cross_polytope(4)",
/// "erdos_renyi(20,1/2,7)" or "icosahedron". Throws InputError on unknown
/// families or bad parameters.
Graph generate(std::string_view spec);

/// Family names accepted by generate().
std::vector<std::string> families();

}  // namespace graphcurv::gen
