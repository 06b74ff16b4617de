#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphcurv/graph.hpp"
#include "graphcurv/morse.hpp"
#include "graphcurv/rational.hpp"

namespace graphcurv {

using Path = std::vector<Vertex>;

// Every metric here has the form
//   length(x_0 .. x_m) = m + sum_k w_k t(x_k)
// with a per-vertex deformation t: zero for hop, -c K(x) for curvature2d and
// +2 eps K(x) for genus4d (the action |gamma| - eps S(gamma) shifted by the
// constant 2 eps). With half endpoints w_0 = w_m = 1/2 and w_k = 1 inside,
// which is the edge sum of 1 + (t(u) + t(v))/2: lengths add under
// concatenation and the one-vertex path has length 0. Full endpoints weight
// every vertex 1.

enum class MetricMode { hop, curvature2d, genus4d };
enum class EndpointWeight { half, full };

class PathMetricConfig {
 public:
  static PathMetricConfig hop();
  static PathMetricConfig curvature2d(Rational c, EndpointWeight endpoints = EndpointWeight::half);
  static PathMetricConfig genus4d(Rational epsilon, EndpointWeight endpoints = EndpointWeight::half);

  /// Curvatures of g plus the check that 1 + t(x) > 0 at every vertex.
  /// Throws InputError naming the first offending vertex.
  void validate(const Graph& g) const;

  MetricMode mode() const noexcept { return mode_; }
  const Rational& parameter() const noexcept { return parameter_; }
  EndpointWeight endpoints() const noexcept { return endpoints_; }

 private:
  PathMetricConfig(MetricMode mode, Rational parameter, EndpointWeight endpoints);
  MetricMode mode_;
  Rational parameter_;
  EndpointWeight endpoints_;
};

/// Deformation t(x) for every vertex of g (all zero in hop mode).
std::vector<Rational> vertex_terms(const Graph& g, const PathMetricConfig& config);

/// Throws InputError unless the path is nonempty with consecutive vertices
/// adjacent.
void require_path(const Graph& g, std::span<const Vertex> path);

/// Exact S(gamma) = E_f[chi(G(f, gamma))]. On a 4-dimensional geometric
/// graph genus additivity gives chi(G(f,gamma)) = 2 - 2 sum_k j_f(x_k) and
/// E_f[j_f] = K, so S = 2 - 2 sum_k K(x_k). On a 3-dimensional one each
/// center surface is a union of circles and S = sum_k chi(B_f(x_k)) = 0.
/// Throws DomainError for other graphs.
Rational genus_action(const Graph& g, std::span<const Vertex> path);

/// Monte Carlo S(gamma): sample s draws f = sample_function(g,
/// sample_seed(seed, s)), builds the stellated center surfaces B_f(x_k) and
/// evaluates 2 - 2 sum_k (1 - chi(B)/2) in dimension 4, sum_k chi(B) in
/// dimension 3.
Estimate genus_action_sampled(const Graph& g, std::span<const Vertex> path, std::size_t samples,
                              std::uint64_t seed);

/// |gamma| - eps S(gamma) with the unshifted action.
Rational genus_path_action(const Graph& g, std::span<const Vertex> path, const Rational& epsilon);

Rational path_length(const Graph& g, std::span<const Vertex> path, const PathMetricConfig& config);

/// Minimal length over all paths from a to b. Throws DomainError when b is
/// not reachable from a.
Rational distance(const Graph& g, Vertex a, Vertex b, const PathMetricConfig& config);

/// All minimal paths from a to b in lexicographic order. Throws
/// CapacityError when there are more than max_paths of them.
std::vector<Path> minimal_geodesics(const Graph& g, Vertex a, Vertex b, const PathMetricConfig& config,
                                    std::size_t max_paths = 100000);

/// Distances from a to every vertex; unreachable vertices are std::nullopt.
std::vector<std::optional<Rational>> distances_from(const Graph& g, Vertex a, const PathMetricConfig& config);

/// Largest r such that every vertex whose minimal geodesics from v have at
/// most r edges is joined to v by exactly one of them. With no ties it is the
/// hop eccentricity of v inside its component.
std::size_t injectivity_radius(const Graph& g, Vertex v, const PathMetricConfig& config);

std::string to_json(Rational distance_value, const std::vector<Path>& geodesics);

}  // namespace graphcurv
