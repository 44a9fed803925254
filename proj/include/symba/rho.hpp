#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symba/rational.hpp"
#include "symba/space.hpp"

namespace symba {

// Source of the set function rho(F), which depends only on |F| for every
// implemented variant. rho(empty) = 0 and rho is non-decreasing.
struct RhoProvider {
  enum class Kind { Counting, Symmetric, Table };

  Kind kind;
  std::optional<SpaceSpec> space;  // Symmetric: rho(F) = mu(|F|)
  std::vector<Rational> table;     // Table: value at sizes 1..horizon

  static RhoProvider counting();
  // Requires a space with an exact fundamental function (Lorentz variants or
  // Counting); Orlicz/Nakano would silently degrade the exact lane.
  static RhoProvider symmetric(SpaceSpec spec);
  static RhoProvider table_values(std::vector<Rational> values);

  std::string kind_name() const;
};

Rational rho_value(const RhoProvider& provider, size_t size);

}  // namespace symba
