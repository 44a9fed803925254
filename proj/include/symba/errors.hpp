#pragma once

#include <stdexcept>
#include <string>

namespace symba {

// Bad input: malformed literals, contract violations, table horizons. CLI exit code 2.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal numeric failure: broken brackets, non-finite intermediates. CLI exit code 3.
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace symba
