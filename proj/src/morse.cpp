#include "graphcurv/morse.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "graphcurv/cliques.hpp"
#include "graphcurv/errors.hpp"
#include "graphcurv/euler.hpp"
#include "graphcurv/kernels.hpp"
#include "graphcurv/rng.hpp"

namespace graphcurv {
namespace {

void require_domain(const Graph& g, const VertexFunction& f) {
  if (f.size() != g.order()) {
    throw InputError("vertex function has " + std::to_string(f.size()) + " values for a graph of order " +
                     std::to_string(g.order()));
  }
}

// Neighbors of x with f-value below (or above) f(x).
VertexSet half_sphere(const Graph& g, const VertexFunction& f, Vertex x, bool below) {
  VertexSet s(g.order());
  const auto& kt = kernels::active();
  auto words = s.words();
  kt.less_mask(f.values().data(), f.size(), f[x], words.data());
  const auto row = g.row(x);
  for (std::size_t w = 0; w < words.size(); ++w) {
    words[w] = below ? (words[w] & row[w]) : (~words[w] & row[w]);
  }
  return s;
}

std::int64_t index_from(const Graph& g, const VertexSet& lower) {
  return 1 - euler_characteristic(g, lower);
}

}  // namespace

VertexFunction::VertexFunction(std::vector<double> values) : values_(std::move(values)) {
  std::vector<double> sorted = values_;
  for (double v : sorted) {
    if (!std::isfinite(v)) throw InputError("vertex function values must be finite");
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("vertex function is not injective");
  }
}

VertexFunction VertexFunction::negated() const {
  std::vector<double> v(values_.size());
  std::transform(values_.begin(), values_.end(), v.begin(), [](double x) { return -x; });
  return VertexFunction(std::move(v));
}

VertexFunction sample_function(std::size_t order, std::uint64_t seed) {
  std::vector<double> values(order);
  std::unordered_set<double> used;
  used.reserve(order * 2);
  for (std::size_t v = 0; v < order; ++v) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      const double x = 2.0 * unit_interval(counter_hash(seed, v, attempt)) - 1.0;
      if (used.insert(x).second) {
        values[v] = x;
        break;
      }
    }
  }
  return VertexFunction(std::move(values));
}

std::int64_t index(const Graph& g, const VertexFunction& f, Vertex x) {
  require_domain(g, f);
  require_vertex(g, x);
  return index_from(g, half_sphere(g, f, x, true));
}

Rational symmetric_index(const Graph& g, const VertexFunction& f, Vertex x) {
  require_domain(g, f);
  require_vertex(g, x);
  const std::int64_t up = index_from(g, half_sphere(g, f, x, false));
  return make_rational(index_from(g, half_sphere(g, f, x, true)) + up, 2);
}

std::int64_t poincare_hopf_sum(const Graph& g, const VertexFunction& f) {
  require_domain(g, f);
  std::int64_t sum_i = 0;
  Rational sum_j = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    sum_i += index(g, f, x);
    sum_j += symmetric_index(g, f, x);
  }
  const std::int64_t chi = euler_characteristic(g);
  if (sum_i != chi || sum_j != chi) {
    throw ConsistencyError("Poincare-Hopf failed: sum i = " + std::to_string(sum_i) + ", sum j = " +
                           to_string(sum_j) + ", chi = " + std::to_string(chi));
  }
  return sum_i;
}

Rational exact_index_expectation(const Graph& g, Vertex x) {
  require_vertex(g, x);
  VertexSet sphere(g.order());
  std::copy(g.row(x).begin(), g.row(x).end(), sphere.words().begin());
  const FVector v = f_vector(g, sphere);
  Rational k = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational term(BigInt(static_cast<unsigned long>(v[i])), BigInt(static_cast<unsigned long>(i + 2)));
    if (i % 2 == 0) k -= term;
    else k += term;
  }
  k.canonicalize();
  return k;
}

CurvatureReport curvature_report(const Graph& g) {
  CurvatureReport r;
  r.per_vertex.reserve(g.order());
  r.total = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    r.per_vertex.push_back(exact_index_expectation(g, x));
    r.total += r.per_vertex.back();
  }
  const std::int64_t chi = euler_characteristic(g);
  if (r.total != chi) {
    throw ConsistencyError("Gauss-Bonnet failed: total curvature " + to_string(r.total) + " != chi " +
                           std::to_string(chi));
  }
  return r;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t sample) {
  return counter_hash(seed, 0x4d6f727365ULL, sample);
}

Estimate summarize(std::span<const double> xs) {
  Estimate e;
  if (xs.empty()) return e;
  double sum = 0.0;
  for (double x : xs) sum += x;
  e.mean = sum / static_cast<double>(xs.size());
  if (xs.size() < 2) return e;
  double ss = 0.0;
  for (double x : xs) ss += (x - e.mean) * (x - e.mean);
  const double n = static_cast<double>(xs.size());
  e.stderr_ = std::sqrt(ss / (n - 1.0) / n);
  return e;
}

Estimate curvature_expectation(const Graph& g, Vertex x, std::size_t samples, std::uint64_t seed) {
  require_vertex(g, x);
  if (samples == 0) throw InputError("curvature_expectation requires at least one sample");
  std::vector<double> values;
  values.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    const VertexFunction f = sample_function(g, sample_seed(seed, s));
    values.push_back(static_cast<double>(index(g, f, x)));
  }
  return summarize(values);
}

}  // namespace graphcurv
