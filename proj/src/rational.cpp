#include "graphcurv/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <string>
#include <vector>

#include "graphcurv/errors.hpp"

namespace graphcurv {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InputError("not a rational number: '" + std::string(whole) + "'");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

// RAII wrapper so every exit path clears the MPFR value.
struct MpfrValue {
  explicit MpfrValue(mpfr_prec_t bits) { mpfr_init2(v, bits); }
  ~MpfrValue() { mpfr_clear(v); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_t v;
};

// Enough bits for the requested digits plus margin; rounding happens once.
mpfr_prec_t precision_for(int digits) { return static_cast<mpfr_prec_t>(digits * 4 + 64); }

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw InputError("empty rational");
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const BigInt num = parse_integer(std::string_view(s).substr(0, slash), text);
    const std::string_view den_text = std::string_view(s).substr(slash + 1);
    if (!all_digits(den_text)) throw InputError("bad denominator in '" + std::string(text) + "'");
    const BigInt den(std::string(den_text), 10);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // Decimal: [sign] digits [. digits] [e [sign] digits]
  std::string mantissa = s;
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
    mantissa = s.substr(0, e);
    const std::string exp_text = s.substr(e + 1);
    const BigInt ex = parse_integer(exp_text, text);
    if (!ex.fits_slong_p() || abs(ex) > 100000) throw InputError("exponent out of range in '" + std::string(text) + "'");
    exponent = ex.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.erase(0, 1);
  }
  std::string digits = mantissa;
  if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    if (digits.empty()) throw InputError("not a rational number: '" + std::string(text) + "'");
  }
  if (!all_digits(digits)) throw InputError("not a rational number: '" + std::string(text) + "'");
  Rational q{BigInt(digits, 10)};
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) q /= Rational(scale);
  else q *= Rational(scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string to_decimal(const Rational& q, int significant_digits) {
  MpfrValue v(precision_for(significant_digits));
  mpfr_set_q(v.v, q.get_mpq_t(), MPFR_RNDN);
  const int size = mpfr_snprintf(nullptr, 0, "%.*Rg", significant_digits, v.v);
  std::vector<char> buf(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", significant_digits, v.v);
  return std::string(buf.data(), static_cast<std::size_t>(size));
}

double to_double(const Rational& q) {
  MpfrValue v(128);
  mpfr_set_q(v.v, q.get_mpq_t(), MPFR_RNDN);
  return mpfr_get_d(v.v, MPFR_RNDN);
}

}  // namespace graphcurv
