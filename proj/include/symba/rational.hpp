#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "symba/errors.hpp"

namespace symba {

// Exact arbitrary-precision rational. Always reduced, denominator >= 1.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Text form is "p/q", or just "p" when q == 1 (matches Rational::str()).
inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts optional leading sign, digits, optional "/digits". No decimals, no exponents.
inline Rational parse_rational(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos)
    throw validation_error("empty rational literal");
  std::string_view s = text.substr(begin, end - begin + 1);

  auto bad = [&] { return validation_error("malformed rational literal: '" + std::string(text) + "'"); };
  size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  auto take_digits = [&]() -> std::string {
    size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) throw bad();
    return std::string(s.substr(start, pos - start));
  };
  std::string num = take_digits();
  std::string den = "1";
  if (pos < s.size()) {
    if (s[pos] != '/') throw bad();
    ++pos;
    den = take_digits();
    if (pos != s.size()) throw bad();
  }
  BigInt n(num), d(den);
  if (d == 0) throw validation_error("zero denominator in rational literal: '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);  // mpz pair constructor canonicalizes
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline int rat_sign(const Rational& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

// Exact integer power; negative exponents invert (error on zero base).
inline Rational rat_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp < 0) throw numeric_error("rat_pow: zero base with negative exponent");
    return Rational(0);
  }
  unsigned long mag = exp < 0 ? static_cast<unsigned long>(-(exp + 1)) + 1ul : static_cast<unsigned long>(exp);
  BigInt n = boost::multiprecision::pow(numerator(base), mag);
  BigInt d = boost::multiprecision::pow(denominator(base), mag);
  return exp < 0 ? Rational(d, n) : Rational(n, d);
}

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

}  // namespace symba
