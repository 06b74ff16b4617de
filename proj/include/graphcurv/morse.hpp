#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"

namespace graphcurv {

/// Injective real function on the vertices of a graph.
class VertexFunction {
 public:
  VertexFunction() = default;
  /// Throws InputError when two values coincide or a value is not finite.
  explicit VertexFunction(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](Vertex v) const noexcept { return values_[v]; }
  std::span<const double> values() const noexcept { return values_; }

  /// x -> -f(x).
  VertexFunction negated() const;

  friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

 private:
  std::vector<double> values_;
};

/// I.i.d. uniform values on [-1, 1], value v drawn from counter_hash(seed, v,
/// attempt). A value colliding with an earlier vertex is redrawn with the
/// next attempt counter; stored values are never perturbed.
VertexFunction sample_function(std::size_t order, std::uint64_t seed);
inline VertexFunction sample_function(const Graph& g, std::uint64_t seed) {
  return sample_function(g.order(), seed);
}

/// Poincare-Hopf index i_f(x) = 1 - chi(S_f^-(x)), where S_f^-(x) is the part
/// of the unit sphere with smaller f-value.
std::int64_t index(const Graph& g, const VertexFunction& f, Vertex x);

/// j_f(x) = (i_f(x) + i_{-f}(x)) / 2.
Rational symmetric_index(const Graph& g, const VertexFunction& f, Vertex x);

/// sum_x i_f(x). Throws ConsistencyError unless it equals both sum_x j_f(x)
/// and chi(G).
std::int64_t poincare_hopf_sum(const Graph& g, const VertexFunction& f);

/// E_f[i_f(x)] over any exchangeable atomless law: a k-simplex of S(x) lies
/// entirely below x with probability 1/(k+2), so
///   K(x) = 1 - sum_k (-1)^k V_k(x) / (k+2)
/// with V the f-vector of S(x). This is the curvature at x.
Rational exact_index_expectation(const Graph& g, Vertex x);
inline Rational curvature(const Graph& g, Vertex x) { return exact_index_expectation(g, x); }

struct CurvatureReport {
  std::vector<Rational> per_vertex;
  Rational total;
};

/// Curvature of every vertex. Throws ConsistencyError if the total differs
/// from chi(G).
CurvatureReport curvature_report(const Graph& g);

struct Estimate {
  double mean = 0.0;
  double stderr_ = 0.0;  // sample standard error of the mean
};

/// Monte Carlo mean of i_f(x); sample s uses sample_function(g,
/// counter_hash(seed, s)), so the result is independent of evaluation order.
/// Throws InputError when samples == 0.
Estimate curvature_expectation(const Graph& g, Vertex x, std::size_t samples, std::uint64_t seed);

/// Seed of the s-th function in a seeded Monte Carlo run.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t sample);

/// Mean and standard error of a sample; n == 1 gives stderr 0.
Estimate summarize(std::span<const double> xs);

}  // namespace graphcurv
