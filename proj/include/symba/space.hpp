#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "symba/exponents.hpp"
#include "symba/finvec.hpp"
#include "symba/orlicz.hpp"
#include "symba/rational.hpp"
#include "symba/value.hpp"
#include "symba/weights.hpp"

namespace symba {

enum class SpaceKind { LorentzPredual, LorentzDual, Counting, Orlicz, Nakano };

// A symmetric sequence space. Lorentz and Counting variants carry an exact
// rational lane; Orlicz and Nakano evaluate in binary64.
struct SpaceSpec {
  SpaceKind kind;
  std::optional<WeightSeq> weights;  // Lorentz variants
  std::optional<OrliczFn> M;         // Orlicz
  std::optional<ExponentSeq> p;      // Nakano

  static SpaceSpec lorentz_predual(WeightSeq w);
  static SpaceSpec lorentz_dual(WeightSeq w);
  static SpaceSpec counting();
  static SpaceSpec orlicz(OrliczFn M);
  static SpaceSpec nakano(ExponentSeq p);

  bool exact() const {
    return kind == SpaceKind::LorentzPredual || kind == SpaceKind::LorentzDual ||
           kind == SpaceKind::Counting;
  }
  std::string kind_name() const;
};

// Sum of w_n times the n-th largest |f| value.
Rational lorentz_dual_norm(const FinVec& f, const WeightSeq& w);

// Max over 1 <= k <= |supp(x)| of (sum of k largest |x|) / (w_1 + ... + w_k);
// 0 for the zero vector.
Rational lorentz_predual_norm(const FinVec& x, const WeightSeq& w);

// Orlicz: sum of M(|x_i|/rho). Nakano: supremum over injective assignments of
// coordinates to exponent positions of sum |x_i/rho|^{p_k}; +infinity when a
// ratio exceeds 1 and the exponents are unbounded. Exact Rational result when
// rho, x, and the touched exponents are all rational with integer exponents;
// binary64 otherwise.
Value modular_value(const FinVec& x, const SpaceSpec& spec, const Value& rho);

struct LuxemburgResult {
  double value;  // midpoint of the final bracket
  double lo;     // modular(lo) >= 1
  double hi;     // modular(hi) <= 1
};

// inf{rho > 0 : modular(x/rho) <= 1} by bracketed bisection, relative width
// 1e-12, at most 200 halvings. The bracket is part of the result so callers
// can make one-sided comparisons rigorous.
LuxemburgResult luxemburg_solve(const FinVec& x, const SpaceSpec& spec);
double luxemburg_norm(const FinVec& x, const SpaceSpec& spec);

// Least t with M(t) = y. Closed form when the function carries one.
double orlicz_inverse(const OrliczFn& M, double y);

struct FundamentalPair {
  Value lambda;  // norm of the sum of n distinct basis vectors
  Value mu;      // n / lambda(n)
};

FundamentalPair fundamental_functions(const SpaceSpec& spec, size_t n);

// The space's own norm: prefix-ratio max (LorentzPredual), sorted dot
// (LorentzDual), sup (Counting), Luxemburg (Orlicz/Nakano).
Value norm_value(const SpaceSpec& spec, const FinVec& f);

}  // namespace symba
