#pragma once

#include <map>

#include "symba/finvec.hpp"
#include "symba/profile.hpp"
#include "symba/rho.hpp"

namespace symba {

struct ThetaBreakdown {
  RangeProfile profile;
  std::vector<Rational> rho;    // rho(|G_k|) per level
  std::vector<Rational> terms;  // q_k * rho(|G_k|)
  Rational theta;               // sum of terms
};

ThetaBreakdown theta_breakdown(const FinVec& f, const RhoProvider& provider);
Rational theta_value(const FinVec& f, const RhoProvider& provider);

// Sign vector on the k-th level set, 1 <= k <= number of levels.
FinVec omega(const FinVec& f, size_t k);

// h_m: the level-k gaps summed over the first m level sets. Computed both as
// sum q_k omega_k and as the closed form (restriction to G_m minus p_{m+1}
// times omega_m); the two are cross-checked on every call.
FinVec h_functional(const FinVec& f, size_t m);

// g_{m,n}: (theta(f - h_m) / rho(|G_n|)) omega_n, zero when n exceeds the
// last level. Requires m < n.
FinVec g_functional(const FinVec& f, size_t m, size_t n, const RhoProvider& provider);

// j_{m,n} = h_m + g_{m,n}.
FinVec j_functional(const FinVec& f, size_t m, size_t n, const RhoProvider& provider);

// Convex coefficients lambda_n with f = sum lambda_n j_{m,n}; weight 1 at
// n = m+1 when f = h_m(f) already.
std::map<size_t, Rational> convex_weights(const FinVec& f, size_t m,
                                          const RhoProvider& provider);

struct Reconstruction {
  FinVec reconstruction;
  Rational residual_norm;  // sup distance to f
};

Reconstruction reconstruct(const FinVec& f, size_t m, const RhoProvider& provider);

// sum_{k>m} q_k rho(|G_k|), an upper bound for the norm of f - h_m.
Rational tail_bound(const FinVec& f, size_t m, const RhoProvider& provider);

}  // namespace symba
