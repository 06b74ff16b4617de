#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace graphcurv {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms; den != 0.
inline Rational make_rational(long num, long den = 1) {
  Rational q{BigInt(num), BigInt(den)};
  q.canonicalize();
  return q;
}

/// Parses "p/q", an integer, or a finite decimal such as "0.5" or "-1.25e-1"
/// into an exact rational. Throws InputError on anything else.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Decimal image with the given number of significant digits, computed from
/// the exact value (no intermediate double).
std::string to_decimal(const Rational& q, int significant_digits = 15);

/// Nearest double to q; exact values beyond double range map to +-inf.
double to_double(const Rational& q);

}  // namespace graphcurv
