#include "symba/rho.hpp"

#include "symba/errors.hpp"

namespace symba {

RhoProvider RhoProvider::counting() { return {Kind::Counting, std::nullopt, {}}; }

RhoProvider RhoProvider::symmetric(SpaceSpec spec) {
  if (!spec.exact())
    throw validation_error(
        "symmetric rho provider needs a space with an exact fundamental function "
        "(lorentz_predual, lorentz_dual, or counting)");
  return {Kind::Symmetric, std::move(spec), {}};
}

RhoProvider RhoProvider::table_values(std::vector<Rational> values) {
  if (values.empty()) throw validation_error("rho table must be non-empty");
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) throw validation_error("rho table values must be positive");
    if (i > 0 && values[i] < values[i - 1])
      throw validation_error("rho table must be non-decreasing");
  }
  return {Kind::Table, std::nullopt, std::move(values)};
}

std::string RhoProvider::kind_name() const {
  switch (kind) {
    case Kind::Counting:
      return "counting";
    case Kind::Symmetric:
      return "symmetric";
    case Kind::Table:
      return "table";
  }
  return "";
}

Rational rho_value(const RhoProvider& provider, size_t size) {
  if (size == 0) return Rational(0);
  switch (provider.kind) {
    case RhoProvider::Kind::Counting:
      return Rational(BigInt(size));
    case RhoProvider::Kind::Symmetric:
      return fundamental_functions(*provider.space, size).mu.rat();
    case RhoProvider::Kind::Table:
      if (size > provider.table.size())
        throw validation_error("rho table exhausted at size " + std::to_string(size) +
                               " (horizon " + std::to_string(provider.table.size()) + ")");
      return provider.table[size - 1];
  }
  throw validation_error("unknown rho provider");
}

}  // namespace symba
