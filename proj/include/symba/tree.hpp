#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symba/ordinal.hpp"
#include "symba/rational.hpp"

namespace symba {

// Element of the tree M_alpha: a finite sequence with t(0) < w*alpha and
// t(i+1) < w*q(t(i)), hence strictly decreasing.
struct TreeNode {
  Ordinal alpha;
  std::vector<Ordinal> seq;

  bool operator==(const TreeNode& rhs) const {
    return alpha == rhs.alpha && seq == rhs.seq;
  }
};

struct MembershipReport {
  bool member;
  std::optional<size_t> violation_index;  // first index whose constraint fails
  std::string detail;
};

MembershipReport check_member(const Ordinal& alpha, const std::vector<Ordinal>& seq);
// Validating constructor; throws with the violation detail.
TreeNode make_node(Ordinal alpha, std::vector<Ordinal> seq);

// q of the last entry; the node lies in level set xi exactly when
// xi <= cb_rank.
Ordinal cb_rank(const TreeNode& t);

// Decided by the child-family criterion: t stays non-isolated in level set xi
// exactly when children with rank >= xi exist cofinally, i.e. when
// q(t(last)) >= xi + 1. Precondition: xi <= cb_rank(t).
bool is_isolated_in_levelset(const TreeNode& t, const Ordinal& xi);

// {base} together with the extensions of base whose next entry avoids the
// excluded set; every excluded ordinal must lie below base(|base|-1).
struct WedgeNbhd {
  TreeNode base;
  std::vector<Ordinal> excluded;
};

WedgeNbhd make_wedge(TreeNode base, std::vector<Ordinal> excluded);
bool wedge_contains(const WedgeNbhd& U, const TreeNode& t);
// Exact decision: equal bases never disjoint, incomparable bases always, and
// a nested pair is disjoint exactly when the deeper base branches through an
// excluded ordinal of the shallower wedge.
bool wedges_disjoint(const WedgeNbhd& a, const WedgeNbhd& b);

// Children t + (w*beta + m) for each beta (descending) and m < budget
// (ascending); every beta must satisfy beta < q(t(last)).
std::vector<TreeNode> children_sample(const TreeNode& t, std::vector<Ordinal> betas,
                                      size_t budget);

// Finite combination of Dirac masses, keyed by the node text form.
struct DiracCombo {
  std::map<std::string, Rational> coeffs;
};

// One transport step: delta_s - delta_u - phi_0(s) delta_{t_0}
// + sum_{n>=1} phi_n(s) (delta_{t_{n-1}} - delta_{t_n}), where phi_n is the
// indicator of the n-th wedge. Wedges must be pairwise disjoint, contain
// their t_n, and exclude u.
DiracCombo dirac_transport(const TreeNode& s, const TreeNode& u,
                           const std::vector<TreeNode>& points,
                           const std::vector<WedgeNbhd>& wedges);

std::string node_to_string(const TreeNode& t);
// The bracketed entry list alone, no membership check.
std::vector<Ordinal> parse_node_seq(std::string_view text);
// "[w*3+1, w*2+7, 5]" against a given ambient alpha.
TreeNode parse_node(const Ordinal& alpha, std::string_view text);

}  // namespace symba
