#include "graphcurv/random_er.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <thread>

#include "graphcurv/errors.hpp"
#include "graphcurv/euler.hpp"
#include "graphcurv/generators.hpp"

namespace graphcurv {
namespace {

void require_probability(const Rational& p) {
  if (p < 0 || p > 1) throw InputError("probability " + to_string(p) + " outside [0,1]");
}

unsigned long pairs(std::size_t k) { return static_cast<unsigned long>(k * (k - 1) / 2); }

}  // namespace

ErExpectation expected_chi_exact(std::size_t n, const Rational& p, bool keep_terms) {
  if (n == 0) throw InputError("expected_chi_exact requires n >= 1");
  require_probability(p);
  ErExpectation out;
  out.n = n;
  out.p = p;

  // With p = a/b every term is C(n,k) a^{C(k,2)} b^{C(n,2)-C(k,2)} / b^{C(n,2)}.
  const BigInt a = p.get_num();
  const BigInt b = p.get_den();
  const unsigned long total = pairs(n);
  BigInt denominator;
  mpz_pow_ui(denominator.get_mpz_t(), b.get_mpz_t(), total);

  BigInt sum = 0;
  BigInt binom = 1;
  BigInt term, a_pow, b_pow;
  for (std::size_t k = 1; k <= n; ++k) {
    binom = binom * static_cast<unsigned long>(n - k + 1) / static_cast<unsigned long>(k);
    mpz_pow_ui(a_pow.get_mpz_t(), a.get_mpz_t(), pairs(k));
    mpz_pow_ui(b_pow.get_mpz_t(), b.get_mpz_t(), total - pairs(k));
    term = binom * a_pow * b_pow;
    if (k % 2 == 0) term = -term;
    sum += term;
    if (keep_terms) {
      Rational t(term, denominator);
      t.canonicalize();
      out.terms.push_back(std::move(t));
    }
  }
  out.value = Rational(sum, denominator);
  out.value.canonicalize();
  out.approx = to_double(out.value);
  return out;
}

Estimate expected_chi_mc(std::size_t n, const Rational& p, std::size_t samples, std::uint64_t seed,
                         const McLimits& limits) {
  if (samples == 0) throw InputError("expected_chi_mc requires at least one sample");
  if (n == 0) throw InputError("expected_chi_mc requires n >= 1");
  require_probability(p);
  if (p == 0) return {static_cast<double>(n), 0.0};
  if (p == 1) return {1.0, 0.0};
  if (n > limits.max_order || p > limits.max_p) {
    throw CapacityError("Monte Carlo sampling of G(" + std::to_string(n) + ", " + to_string(p) +
                        ") exceeds the limit n <= " + std::to_string(limits.max_order) +
                        ", p <= " + to_string(limits.max_p) + "; use expected_chi_exact");
  }
  std::vector<double> values;
  values.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    const Graph g = gen::erdos_renyi(n, p, sample_seed(seed, s));
    values.push_back(static_cast<double>(euler_characteristic_ph(g)));
  }
  return summarize(values);
}

double log_pm(double x) {
  if (x == 0.0) return 0.0;
  return std::copysign(std::log(std::fabs(x)), x);
}

double log_pm(const Rational& x) {
  const int sign = sgn(x);
  if (sign == 0) return 0.0;
  mpfr_t v;
  mpfr_init2(v, 128);
  mpfr_set_q(v, x.get_mpq_t(), MPFR_RNDN);
  mpfr_abs(v, v, MPFR_RNDN);
  mpfr_log(v, v, MPFR_RNDN);
  const double magnitude = mpfr_get_d(v, MPFR_RNDN);
  mpfr_clear(v);
  return sign < 0 ? -magnitude : magnitude;
}

std::vector<SweepRow> sweep(std::size_t n_max, std::span<const Rational> p_values, unsigned threads) {
  if (n_max == 0) throw InputError("sweep requires n_max >= 1");
  for (const Rational& p : p_values) require_probability(p);
  std::vector<SweepRow> rows;
  rows.reserve(n_max * p_values.size());
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (const Rational& p : p_values) rows.push_back({n, p, Rational(0)});
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(rows.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < rows.size() && !failed; i = next++) {
        rows[i].value = expected_chi_exact(rows[i].n, rows[i].p).value;
      }
    } catch (...) {
      if (!failed.exchange(true)) error = std::current_exception();
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "n,p,expected_chi,log_pm\n";
  for (const SweepRow& r : rows) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.15g", log_pm(r.value));
    out << r.n << ',' << to_string(r.p) << ',' << to_decimal(r.value, 15) << ',' << buffer << '\n';
  }
}

std::vector<Rational> interior_grid(std::size_t count) {
  std::vector<Rational> grid;
  for (std::size_t k = 1; k <= count; ++k) {
    grid.push_back(make_rational(static_cast<long>(k), static_cast<long>(count + 1)));
  }
  return grid;
}

}  // namespace graphcurv
