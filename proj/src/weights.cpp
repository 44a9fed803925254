#include "symba/weights.hpp"

#include <limits>

#include "symba/errors.hpp"

namespace symba {

WeightSeq WeightSeq::harmonic() { return WeightSeq(Kind::Harmonic, {}); }

WeightSeq WeightSeq::explicit_list(std::vector<Rational> values) {
  if (values.empty()) throw validation_error("weight list must be non-empty");
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) throw validation_error("weights must be positive");
    if (i > 0 && values[i] > values[i - 1])
      throw validation_error("weights must be non-increasing");
  }
  if (values[0] != 1) {
    Rational lead = values[0];
    for (auto& w : values) w /= lead;
  }
  return WeightSeq(Kind::Explicit, std::move(values));
}

size_t WeightSeq::horizon() const {
  return kind_ == Kind::Harmonic ? std::numeric_limits<size_t>::max() : values_.size();
}

Rational WeightSeq::at(size_t n) const {
  if (n == 0) throw validation_error("weight index is 1-based");
  if (kind_ == Kind::Harmonic) return Rational(1, BigInt(n));
  if (n > values_.size())
    throw validation_error("weight index " + std::to_string(n) +
                           " beyond declared horizon " + std::to_string(values_.size()));
  return values_[n - 1];
}

Rational WeightSeq::prefix_sum(size_t n) const {
  Rational sum = 0;
  for (size_t k = 1; k <= n; ++k) sum += at(k);
  return sum;
}

std::vector<Rational> WeightSeq::prefix_sums(size_t n) const {
  std::vector<Rational> out;
  out.reserve(n + 1);
  out.push_back(0);
  Rational sum = 0;
  for (size_t k = 1; k <= n; ++k) {
    sum += at(k);
    out.push_back(sum);
  }
  return out;
}

}  // namespace symba
