#pragma once

#include <cstddef>
#include <vector>

#include "symba/rational.hpp"

namespace symba {

// Non-increasing positive weight sequence with w_1 = 1. Immutable after
// construction; explicit lists past their last entry are a hard error rather
// than a silent extension.
class WeightSeq {
 public:
  enum class Kind { Harmonic, Explicit };

  static WeightSeq harmonic();
  // Validates positivity and monotonicity, then rescales so the first weight is 1.
  static WeightSeq explicit_list(std::vector<Rational> values);

  Kind kind() const { return kind_; }
  size_t horizon() const;  // largest valid index; SIZE_MAX when unbounded
  Rational at(size_t n) const;
  // Sum of the first n weights; n = 0 gives 0. Costs O(n), so loops that
  // need many prefixes should take the vector form below.
  Rational prefix_sum(size_t n) const;
  std::vector<Rational> prefix_sums(size_t n) const;

  const std::vector<Rational>& values() const { return values_; }

 private:
  WeightSeq(Kind kind, std::vector<Rational> values)
      : kind_(kind), values_(std::move(values)) {}

  Kind kind_;
  std::vector<Rational> values_;  // empty for Harmonic
};

}  // namespace symba
