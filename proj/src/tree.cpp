#include "symba/tree.hpp"

#include <algorithm>

#include "symba/errors.hpp"

namespace symba {

MembershipReport check_member(const Ordinal& alpha, const std::vector<Ordinal>& seq) {
  if (seq.empty()) return {false, std::nullopt, "sequence must be non-empty"};
  if (ord_compare(seq[0], omega_times(alpha)) >= 0)
    return {false, 0,
            "t(0) = " + ordinal_to_string(seq[0]) + " is not below w*alpha = " +
                ordinal_to_string(omega_times(alpha))};
  for (size_t i = 1; i < seq.size(); ++i) {
    Ordinal bound = omega_times(q_of(seq[i - 1]));
    if (ord_compare(seq[i], bound) >= 0)
      return {false, i,
              "t(" + std::to_string(i) + ") = " + ordinal_to_string(seq[i]) +
                  " is not below w*q(t(" + std::to_string(i - 1) +
                  ")) = " + ordinal_to_string(bound)};
  }
  return {true, std::nullopt, ""};
}

TreeNode make_node(Ordinal alpha, std::vector<Ordinal> seq) {
  auto report = check_member(alpha, seq);
  if (!report.member) throw validation_error("not a tree member: " + report.detail);
  return TreeNode{std::move(alpha), std::move(seq)};
}

Ordinal cb_rank(const TreeNode& t) { return q_of(t.seq.back()); }

bool is_isolated_in_levelset(const TreeNode& t, const Ordinal& xi) {
  Ordinal last_q = q_of(t.seq.back());
  if (ord_compare(xi, last_q) > 0)
    throw validation_error("node is outside level set " + ordinal_to_string(xi));
  // Children t + (w*xi + m) all live in level set xi; they exist exactly when
  // w*xi + m < w*q(t(last)), i.e. when q(t(last)) >= xi + 1.
  return ord_compare(last_q, ord_successor(xi)) < 0;
}

WedgeNbhd make_wedge(TreeNode base, std::vector<Ordinal> excluded) {
  const Ordinal& last = base.seq.back();
  for (const auto& f : excluded)
    if (ord_compare(f, last) >= 0)
      throw validation_error("excluded ordinal " + ordinal_to_string(f) +
                             " is not below the base's last entry " +
                             ordinal_to_string(last));
  std::sort(excluded.begin(), excluded.end(), ord_less);
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
  return WedgeNbhd{std::move(base), std::move(excluded)};
}

namespace {

bool is_strict_prefix(const std::vector<Ordinal>& a, const std::vector<Ordinal>& b) {
  if (a.size() >= b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool excludes(const std::vector<Ordinal>& set, const Ordinal& x) {
  for (const auto& f : set)
    if (f == x) return true;
  return false;
}

}  // namespace

bool wedge_contains(const WedgeNbhd& U, const TreeNode& t) {
  if (!(U.base.alpha == t.alpha))
    throw validation_error("wedge and node live in different trees");
  if (U.base == t) return true;
  if (!is_strict_prefix(U.base.seq, t.seq)) return false;
  return !excludes(U.excluded, t.seq[U.base.seq.size()]);
}

bool wedges_disjoint(const WedgeNbhd& a, const WedgeNbhd& b) {
  if (!(a.base.alpha == b.base.alpha))
    throw validation_error("wedges live in different trees");
  if (a.base.seq == b.base.seq) return false;  // both contain the common base
  if (is_strict_prefix(a.base.seq, b.base.seq))
    return excludes(a.excluded, b.base.seq[a.base.seq.size()]);
  if (is_strict_prefix(b.base.seq, a.base.seq))
    return excludes(b.excluded, a.base.seq[b.base.seq.size()]);
  return true;  // incomparable bases have no common extension
}

std::vector<TreeNode> children_sample(const TreeNode& t, std::vector<Ordinal> betas,
                                      size_t budget) {
  if (budget < 1) throw validation_error("children_sample needs budget >= 1");
  Ordinal last_q = q_of(t.seq.back());
  for (const auto& beta : betas)
    if (ord_compare(beta, last_q) >= 0)
      throw validation_error("beta = " + ordinal_to_string(beta) +
                             " is not below q(t(last)) = " + ordinal_to_string(last_q));
  std::sort(betas.begin(), betas.end(),
            [](const Ordinal& x, const Ordinal& y) { return ord_less(y, x); });
  betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
  std::vector<TreeNode> out;
  for (const auto& beta : betas) {
    Ordinal entry = omega_times(beta);
    for (size_t m = 0; m < budget; ++m) {
      std::vector<Ordinal> seq = t.seq;
      seq.push_back(entry);
      out.push_back(make_node(t.alpha, std::move(seq)));
      entry = ord_successor(entry);
    }
  }
  return out;
}

DiracCombo dirac_transport(const TreeNode& s, const TreeNode& u,
                           const std::vector<TreeNode>& points,
                           const std::vector<WedgeNbhd>& wedges) {
  if (points.empty() || points.size() != wedges.size())
    throw validation_error("transport needs matching non-empty points and wedges");
  if (s == u) throw validation_error("transport source must differ from u");
  for (const auto& t : points)
    if (t == u) throw validation_error("u must be distinct from every t_n");
  for (size_t n = 0; n < wedges.size(); ++n) {
    if (!wedge_contains(wedges[n], points[n]))
      throw validation_error("wedge " + std::to_string(n) + " does not contain t_" +
                             std::to_string(n));
    if (wedge_contains(wedges[n], u))
      throw validation_error("wedge " + std::to_string(n) + " contains u");
    for (size_t k = n + 1; k < wedges.size(); ++k)
      if (!wedges_disjoint(wedges[n], wedges[k]))
        throw validation_error("wedges " + std::to_string(n) + " and " +
                               std::to_string(k) + " overlap");
  }
  DiracCombo combo;
  auto add = [&combo](const TreeNode& t, const Rational& c) {
    std::string key = node_to_string(t);
    Rational next = combo.coeffs.count(key) ? combo.coeffs[key] + c : c;
    if (next == 0)
      combo.coeffs.erase(key);
    else
      combo.coeffs[key] = next;
  };
  add(s, 1);
  add(u, -1);
  if (wedge_contains(wedges[0], s)) add(points[0], -1);
  for (size_t n = 1; n < wedges.size(); ++n) {
    if (!wedge_contains(wedges[n], s)) continue;
    add(points[n - 1], 1);
    add(points[n], -1);
  }
  return combo;
}

std::string node_to_string(const TreeNode& t) {
  std::string out = "[";
  for (size_t i = 0; i < t.seq.size(); ++i) {
    if (i > 0) out += ", ";
    out += ordinal_to_string(t.seq[i]);
  }
  return out + "]";
}

std::vector<Ordinal> parse_node_seq(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw validation_error("node literal must be bracketed: [w*3+1, 5]");
  text = text.substr(1, text.size() - 2);
  std::vector<Ordinal> seq;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    seq.push_back(parse_ordinal(text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return seq;
}

TreeNode parse_node(const Ordinal& alpha, std::string_view text) {
  return make_node(alpha, parse_node_seq(text));
}

}  // namespace symba
