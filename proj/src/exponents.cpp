#include "symba/exponents.hpp"

#include <cmath>
#include <limits>

#include "symba/errors.hpp"

namespace symba {

namespace {

double loglog_rule(size_t k) { return 2.0 * std::log(std::log(double(k)) + 1.0) + 1.0; }

void validate_prefix(const std::vector<Rational>& prefix) {
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] < 1) throw validation_error("exponents must be >= 1");
    if (i > 0 && prefix[i] < prefix[i - 1])
      throw validation_error("exponents must be non-decreasing");
  }
}

}  // namespace

ExponentSeq::ExponentSeq(Kind kind, std::vector<Rational> prefix)
    : kind_(kind), prefix_(std::move(prefix)) {}

ExponentSeq ExponentSeq::loglog(std::vector<Rational> prefix) {
  validate_prefix(prefix);
  if (!prefix.empty() && to_double(prefix.back()) > loglog_rule(prefix.size() + 1))
    throw validation_error("prefix exceeds the continuation rule at the seam");
  return ExponentSeq(Kind::LogLog, std::move(prefix));
}

ExponentSeq ExponentSeq::linear() { return ExponentSeq(Kind::Linear, {}); }

ExponentSeq ExponentSeq::explicit_list(std::vector<Rational> prefix) {
  if (prefix.empty()) throw validation_error("exponent list must be non-empty");
  validate_prefix(prefix);
  return ExponentSeq(Kind::Explicit, std::move(prefix));
}

double ExponentSeq::at(size_t k) const {
  if (k == 0) throw validation_error("exponent index is 1-based");
  if (k <= prefix_.size()) return to_double(prefix_[k - 1]);
  switch (kind_) {
    case Kind::LogLog:
      return loglog_rule(k);
    case Kind::Linear:
      return double(k);
    case Kind::Explicit:
      return to_double(prefix_.back());
  }
  return 0;  // unreachable
}

std::optional<Rational> ExponentSeq::exact_at(size_t k) const {
  if (k == 0) throw validation_error("exponent index is 1-based");
  if (k <= prefix_.size()) return prefix_[k - 1];
  switch (kind_) {
    case Kind::LogLog:
      return k == 1 ? std::optional<Rational>(Rational(1)) : std::nullopt;
    case Kind::Linear:
      return Rational(BigInt(k));
    case Kind::Explicit:
      return prefix_.back();
  }
  return std::nullopt;
}

double ExponentSeq::sup() const {
  if (kind_ == Kind::Explicit) return to_double(prefix_.back());
  return std::numeric_limits<double>::infinity();
}

}  // namespace symba
