#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <symba/finvec.hpp>
#include <symba/rational.hpp>

namespace symba::testing {

// Deterministic generator: mt19937_64 has a standard-mandated sequence, and we
// reduce by modulo ourselves because the standard distributions do not.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next(uint64_t bound) {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_ % bound;
  }

  // Nonzero rational with numerator in [-max_num, max_num], denominator in [1, max_den].
  Rational rational(uint64_t max_num = 9, uint64_t max_den = 9) {
    long long num = 0;
    while (num == 0) num = static_cast<long long>(next(2 * max_num + 1)) - static_cast<long long>(max_num);
    long long den = static_cast<long long>(next(max_den)) + 1;
    return Rational(BigInt(num), BigInt(den));
  }

  FinVec finvec(size_t max_support) {
    FinVec f;
    size_t support = next(max_support + 1);
    for (size_t i = 0; i < support; ++i)
      f.set("x" + std::to_string(i), rational());
    return f;
  }

 private:
  uint64_t state_;
};

}  // namespace symba::testing
