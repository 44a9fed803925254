#include "symba/approx.hpp"

#include "symba/errors.hpp"

namespace symba {

ThetaBreakdown theta_breakdown(const FinVec& f, const RhoProvider& provider) {
  ThetaBreakdown out;
  out.profile = range_profile(f);
  out.theta = 0;
  for (size_t k = 0; k < out.profile.levels(); ++k) {
    Rational r = rho_value(provider, out.profile.G[k].size());
    out.rho.push_back(r);
    out.terms.push_back(out.profile.q[k] * r);
    out.theta += out.terms.back();
  }
  return out;
}

Rational theta_value(const FinVec& f, const RhoProvider& provider) {
  return theta_breakdown(f, provider).theta;
}

FinVec omega(const FinVec& f, size_t k) {
  RangeProfile profile = range_profile(f);
  if (k < 1 || k > profile.levels())
    throw validation_error("level " + std::to_string(k) + " out of range (f has " +
                           std::to_string(profile.levels()) + " levels)");
  FinVec out;
  for (const auto& label : profile.G[k - 1])
    out.set(label, Rational(rat_sign(f.at(label))));
  return out;
}

FinVec h_functional(const FinVec& f, size_t m) {
  if (m < 1) throw validation_error("h needs m >= 1");
  RangeProfile profile = range_profile(f);
  size_t levels = profile.levels();
  if (m >= levels) return f;
  // Definition: sum over k <= m of q_k omega_k.
  FinVec by_definition;
  for (size_t k = 1; k <= m; ++k)
    by_definition = by_definition + omega(f, k).scaled(profile.q[k - 1]);
  // Closed form: f restricted to G_m, slid down by p_{m+1} toward 0.
  FinVec closed;
  for (const auto& label : profile.G[m - 1])
    closed.set(label, f.at(label) - profile.p[m] * rat_sign(f.at(label)));
  if (!(by_definition == closed))
    throw numeric_error("h functional cross-check failed");  // unreachable
  return by_definition;
}

FinVec g_functional(const FinVec& f, size_t m, size_t n, const RhoProvider& provider) {
  if (m < 1 || m >= n) throw validation_error("g needs 1 <= m < n");
  RangeProfile profile = range_profile(f);
  if (n > profile.levels()) return FinVec();  // p_n = 0
  Rational scale =
      theta_value(f - h_functional(f, m), provider) / rho_value(provider, profile.G[n - 1].size());
  return omega(f, n).scaled(scale);
}

FinVec j_functional(const FinVec& f, size_t m, size_t n, const RhoProvider& provider) {
  return h_functional(f, m) + g_functional(f, m, n, provider);
}

std::map<size_t, Rational> convex_weights(const FinVec& f, size_t m,
                                          const RhoProvider& provider) {
  if (m < 1) throw validation_error("convex_weights needs m >= 1");
  RangeProfile profile = range_profile(f);
  std::map<size_t, Rational> out;
  if (m >= profile.levels()) {
    out[m + 1] = 1;
    return out;
  }
  Rational tail = theta_value(f - h_functional(f, m), provider);
  for (size_t n = m + 1; n <= profile.levels(); ++n)
    out[n] = profile.q[n - 1] * rho_value(provider, profile.G[n - 1].size()) / tail;
  return out;
}

Reconstruction reconstruct(const FinVec& f, size_t m, const RhoProvider& provider) {
  auto weights = convex_weights(f, m, provider);
  FinVec sum;
  for (const auto& [n, lambda] : weights)
    sum = sum + j_functional(f, m, n, provider).scaled(lambda);
  return {sum, linf_norm(f - sum)};
}

Rational tail_bound(const FinVec& f, size_t m, const RhoProvider& provider) {
  if (m < 1) throw validation_error("tail_bound needs m >= 1");
  RangeProfile profile = range_profile(f);
  Rational sum = 0;
  for (size_t k = m + 1; k <= profile.levels(); ++k)
    sum += profile.q[k - 1] * rho_value(provider, profile.G[k - 1].size());
  return sum;
}

}  // namespace symba
