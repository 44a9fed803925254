#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <variant>

#include "symba/rational.hpp"

namespace symba {

// 17 significant digits: enough to round-trip binary64, deterministic across runs.
inline std::string format_float(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Exact-or-binary64 scalar for report payloads and CLI output.
class Value {
 public:
  Value() : v_(Rational(0)) {}
  Value(Rational r) : v_(std::move(r)) {}
  Value(double d) : v_(d) {}

  bool exact() const { return std::holds_alternative<Rational>(v_); }

  const Rational& rat() const {
    if (!exact()) throw numeric_error("Value: float payload where exact was required");
    return std::get<Rational>(v_);
  }

  double as_double() const {
    return exact() ? to_double(std::get<Rational>(v_)) : std::get<double>(v_);
  }

  std::string str() const {
    return exact() ? to_string(std::get<Rational>(v_)) : format_float(std::get<double>(v_));
  }

 private:
  std::variant<Rational, double> v_;
};

}  // namespace symba
