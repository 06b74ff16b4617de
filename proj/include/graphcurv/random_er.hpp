#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "graphcurv/morse.hpp"
#include "graphcurv/rational.hpp"

namespace graphcurv {

// Expected Euler characteristic of G(n, p). Linearity of expectation over
// the C(n,k) vertex subsets gives
//   E_{n,p}[chi] = sum_{k=1}^n (-1)^{k+1} C(n,k) p^{C(k,2)}.
// The sum cancels catastrophically in floating point, so it is evaluated over
// a common denominator with big integers.

struct ErExpectation {
  std::size_t n = 0;
  Rational p;
  Rational value;
  double approx = 0.0;
  std::vector<Rational> terms;  // term k at index k-1, only when requested
};

/// Throws InputError unless n >= 1 and 0 <= p <= 1.
ErExpectation expected_chi_exact(std::size_t n, const Rational& p, bool keep_terms = false);

struct McLimits {
  std::size_t max_order = 64;
  Rational max_p = make_rational(7, 10);
};

/// Monte Carlo mean of chi over seeded samples gen::erdos_renyi(n, p,
/// sample_seed(seed, s)), each evaluated by the Poincare-Hopf engine.
/// p = 0 and p = 1 give a single graph, returned exactly with stderr 0 and
/// not subject to the limits. Throws InputError for samples == 0 or p outside
/// [0,1], CapacityError when n or p exceed `limits`.
Estimate expected_chi_mc(std::size_t n, const Rational& p, std::size_t samples, std::uint64_t seed,
                         const McLimits& limits = {});

/// sign(x) log|x|, with log_pm(0) = 0.
double log_pm(double x);
/// Same for an exact value, computed without overflowing to a double first.
double log_pm(const Rational& x);

struct SweepRow {
  std::size_t n;
  Rational p;
  Rational value;
};

/// One row per (n, p), n = 1..n_max, sorted by n then by p as given. Cells are
/// spread over `threads` workers (0 picks the hardware concurrency).
std::vector<SweepRow> sweep(std::size_t n_max, std::span<const Rational> p_values, unsigned threads = 1);

/// CSV with header "n,p,expected_chi,log_pm".
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

/// k/(count+1) for k = 1..count: `count` evenly spaced interior points of (0,1).
std::vector<Rational> interior_grid(std::size_t count);

}  // namespace graphcurv
