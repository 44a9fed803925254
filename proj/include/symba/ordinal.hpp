#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symba {

// Ordinal below w^w in Cantor normal form: sum of w^e * c terms with strictly
// decreasing natural exponents and positive coefficients. Empty term list = 0.
struct Ordinal {
  std::vector<std::pair<unsigned long long, unsigned long long>> terms;

  static Ordinal zero() { return {}; }
  static Ordinal nat(unsigned long long n);
  static Ordinal omega() { return Ordinal{{{1, 1}}}; }

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Ordinal& rhs) const { return terms == rhs.terms; }
};

// -1, 0, 1 for <, =, >.
int ord_compare(const Ordinal& a, const Ordinal& b);
bool ord_less(const Ordinal& a, const Ordinal& b);

Ordinal ord_successor(const Ordinal& a);
// Left product w * a: by left distributivity this shifts every exponent up by
// one, coefficients unchanged (w * (w^e * c) = w^{e+1} * c).
Ordinal omega_times(const Ordinal& a);

// The unique q with w*q <= eta < w*(q+1): drop the exponent-0 term and
// decrement the remaining exponents. The defining double inequality is
// re-verified on every call.
Ordinal q_of(const Ordinal& eta);

// Text grammar: "w^2*3+w*4+7", "w", "0"; coefficient 1 and exponent 1 are
// elided on output. Round trips bit-exactly.
std::string ordinal_to_string(const Ordinal& a);
Ordinal parse_ordinal(std::string_view text);

}  // namespace symba
