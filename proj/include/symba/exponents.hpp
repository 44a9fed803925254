#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symba/rational.hpp"

namespace symba {

// Non-decreasing exponent sequence with p_1 >= 1. An explicit prefix may
// overlay the first entries of any rule; explicit-only sequences continue
// with their last value, which also makes them bounded.
class ExponentSeq {
 public:
  enum class Kind { LogLog, Linear, Explicit };

  // p_k = 2*log(log(k)+1) + 1 past the prefix (natural logs, p_1 = 1).
  static ExponentSeq loglog(std::vector<Rational> prefix = {});
  // p_k = k.
  static ExponentSeq linear();
  static ExponentSeq explicit_list(std::vector<Rational> prefix);

  Kind kind() const { return kind_; }
  double at(size_t k) const;
  // Exact value when the rule yields one (prefix entries, linear, explicit
  // continuation); loglog values past the prefix are irrational.
  std::optional<Rational> exact_at(size_t k) const;
  bool bounded() const { return kind_ == Kind::Explicit; }
  double sup() const;  // +inf when unbounded

  const std::vector<Rational>& prefix() const { return prefix_; }

 private:
  ExponentSeq(Kind kind, std::vector<Rational> prefix);

  Kind kind_;
  std::vector<Rational> prefix_;
};

}  // namespace symba
