#include "symba/ordinal.hpp"

#include <stdexcept>

#include "symba/errors.hpp"

namespace symba {

Ordinal Ordinal::nat(unsigned long long n) {
  Ordinal o;
  if (n > 0) o.terms.push_back({0, n});
  return o;
}

int ord_compare(const Ordinal& a, const Ordinal& b) {
  size_t n = std::min(a.terms.size(), b.terms.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.terms[i].first != b.terms[i].first)
      return a.terms[i].first < b.terms[i].first ? -1 : 1;
    if (a.terms[i].second != b.terms[i].second)
      return a.terms[i].second < b.terms[i].second ? -1 : 1;
  }
  if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size() ? -1 : 1;
  return 0;
}

bool ord_less(const Ordinal& a, const Ordinal& b) { return ord_compare(a, b) < 0; }

Ordinal ord_successor(const Ordinal& a) {
  Ordinal out = a;
  if (!out.terms.empty() && out.terms.back().first == 0)
    out.terms.back().second += 1;
  else
    out.terms.push_back({0, 1});
  return out;
}

Ordinal omega_times(const Ordinal& a) {
  Ordinal out = a;
  for (auto& [exponent, coefficient] : out.terms) exponent += 1;
  return out;
}

Ordinal q_of(const Ordinal& eta) {
  Ordinal q;
  for (const auto& [exponent, coefficient] : eta.terms)
    if (exponent > 0) q.terms.push_back({exponent - 1, coefficient});
  // w*q <= eta < w*(q+1) pins q uniquely; cheap enough to check every time.
  if (ord_compare(omega_times(q), eta) > 0 ||
      ord_compare(eta, omega_times(ord_successor(q))) >= 0)
    throw numeric_error("q_of postcondition failed");  // unreachable
  return q;
}

std::string ordinal_to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [exponent, coefficient] : a.terms) {
    if (!out.empty()) out += '+';
    if (exponent == 0) {
      out += std::to_string(coefficient);
      continue;
    }
    out += 'w';
    if (exponent > 1) out += '^' + std::to_string(exponent);
    if (coefficient > 1) out += '*' + std::to_string(coefficient);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

unsigned long long parse_nat(std::string_view text, const char* what) {
  if (text.empty()) throw validation_error(std::string("empty ") + what + " in ordinal");
  unsigned long long value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw validation_error(std::string("malformed ") + what + " in ordinal: '" +
                             std::string(text) + "'");
    unsigned long long digit = (unsigned long long)(c - '0');
    if (value > (~0ULL - digit) / 10) throw validation_error("ordinal component overflows");
    value = value * 10 + digit;
  }
  return value;
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw validation_error("empty ordinal literal");
  if (text == "0") return Ordinal::zero();
  Ordinal out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t plus = text.find('+', pos);
    std::string_view term = trim(
        text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos));
    if (term.empty()) throw validation_error("empty term in ordinal literal");
    unsigned long long exponent = 0, coefficient = 0;
    if (term[0] == 'w') {
      term.remove_prefix(1);
      exponent = 1;
      if (!term.empty() && term[0] == '^') {
        size_t star = term.find('*');
        exponent = parse_nat(term.substr(1, star == std::string_view::npos
                                                ? std::string_view::npos
                                                : star - 1),
                             "exponent");
        if (exponent == 0) throw validation_error("w^0 is not canonical; write the number");
        term = star == std::string_view::npos ? std::string_view() : term.substr(star);
      }
      if (term.empty()) {
        coefficient = 1;
      } else if (term[0] == '*') {
        coefficient = parse_nat(term.substr(1), "coefficient");
        if (coefficient == 0) throw validation_error("zero coefficient in ordinal");
      } else {
        throw validation_error("malformed ordinal term");
      }
    } else {
      coefficient = parse_nat(term, "constant");
      if (coefficient == 0) throw validation_error("zero term in ordinal sum");
    }
    if (!out.terms.empty() && out.terms.back().first <= exponent)
      throw validation_error("ordinal exponents must strictly decrease");
    out.terms.push_back({exponent, coefficient});
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return out;
}

}  // namespace symba
