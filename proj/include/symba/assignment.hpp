#pragma once

#include <cstddef>
#include <vector>

#include "symba/errors.hpp"

namespace symba {

// Exact maximum-assignment over all injective maps of n items to n slots,
// where cost(i, k) is the value of item i in slot k. Subset DP: dp[S] is the
// best total over items in S occupying slots 1..|S|.
template <typename V, typename CostFn>
V assignment_max_exact(size_t n, CostFn cost) {
  if (n == 0) return V(0);
  if (n > 20) throw validation_error("exact assignment capped at 20 items");
  std::vector<V> dp(size_t(1) << n, V(0));
  for (size_t s = 1; s < dp.size(); ++s) {
    size_t slot = size_t(__builtin_popcountll(s));
    bool first = true;
    V best(0);
    for (size_t i = 0; i < n; ++i) {
      if (!(s >> i & 1)) continue;
      V cand = dp[s ^ (size_t(1) << i)] + cost(i, slot);
      if (first || cand > best) {
        best = cand;
        first = false;
      }
    }
    dp[s] = best;
  }
  return dp.back();
}

// O(n^3) maximum-cost perfect assignment on doubles (Jonker-Volgenant style
// potentials, run on negated costs).
double assignment_max_double(const std::vector<std::vector<double>>& cost);

}  // namespace symba
