#pragma once

#include <vector>

#include "symba/finvec.hpp"
#include "symba/rational.hpp"

namespace symba {

// Level structure of a finitely supported functional: distinct magnitudes in
// decreasing order, their gaps, the nested level sets, and the shells.
struct RangeProfile {
  std::vector<Rational> p;            // p_1 > p_2 > ... > 0
  std::vector<Rational> q;            // q_k = p_k - p_{k+1}, with p_{L+1} = 0
  std::vector<std::vector<Label>> G;  // G_k = labels with |f| >= p_k, nested
  std::vector<std::vector<Label>> H;  // H_k = G_k minus G_{k-1}

  size_t levels() const { return p.size(); }
};

RangeProfile range_profile(const FinVec& f);

}  // namespace symba
