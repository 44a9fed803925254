#include "symba/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "symba/assignment.hpp"
#include "symba/errors.hpp"

namespace symba {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Rational> abs_sorted_desc(const FinVec& f) {
  std::vector<Rational> v;
  v.reserve(f.support_size());
  for (const auto& [label, value] : f.entries()) v.push_back(rat_abs(value));
  std::sort(v.begin(), v.end(), std::greater<Rational>());
  return v;
}

}  // namespace

SpaceSpec SpaceSpec::lorentz_predual(WeightSeq w) {
  return SpaceSpec{SpaceKind::LorentzPredual, std::move(w), std::nullopt, std::nullopt};
}
SpaceSpec SpaceSpec::lorentz_dual(WeightSeq w) {
  return SpaceSpec{SpaceKind::LorentzDual, std::move(w), std::nullopt, std::nullopt};
}
SpaceSpec SpaceSpec::counting() {
  return SpaceSpec{SpaceKind::Counting, std::nullopt, std::nullopt, std::nullopt};
}
SpaceSpec SpaceSpec::orlicz(OrliczFn M) {
  return SpaceSpec{SpaceKind::Orlicz, std::nullopt, std::move(M), std::nullopt};
}
SpaceSpec SpaceSpec::nakano(ExponentSeq p) {
  return SpaceSpec{SpaceKind::Nakano, std::nullopt, std::nullopt, std::move(p)};
}

std::string SpaceSpec::kind_name() const {
  switch (kind) {
    case SpaceKind::LorentzPredual:
      return "lorentz_predual";
    case SpaceKind::LorentzDual:
      return "lorentz_dual";
    case SpaceKind::Counting:
      return "counting";
    case SpaceKind::Orlicz:
      return "orlicz";
    case SpaceKind::Nakano:
      return "nakano";
  }
  return "";
}

Rational lorentz_dual_norm(const FinVec& f, const WeightSeq& w) {
  auto sorted = abs_sorted_desc(f);
  Rational sum = 0;
  for (size_t i = 0; i < sorted.size(); ++i) sum += w.at(i + 1) * sorted[i];
  return sum;
}

Rational lorentz_predual_norm(const FinVec& x, const WeightSeq& w) {
  auto sorted = abs_sorted_desc(x);
  if (sorted.empty()) return Rational(0);
  Rational best = 0, num = 0, den = 0;
  for (size_t k = 0; k < sorted.size(); ++k) {
    num += sorted[k];
    den += w.at(k + 1);
    Rational ratio = num / den;
    if (ratio > best) best = ratio;
  }
  return best;
}

double assignment_max_double(const std::vector<std::vector<double>>& a) {
  size_t n = a.size();
  if (n == 0) return 0.0;
  // Potential-based shortest augmenting paths on the negated matrix.
  std::vector<double> u(n + 1, 0), v(n + 1, 0), minv(n + 1, 0);
  std::vector<size_t> p(n + 1, 0), way(n + 1, 0);
  for (size_t i = 1; i <= n; ++i) {
    p[0] = i;
    size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      size_t i0 = p[j0], j1 = 0;
      double delta = kInf;
      for (size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = -a[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  double total = 0;
  for (size_t j = 1; j <= n; ++j) total += a[p[j] - 1][j - 1];
  return total;
}

namespace {

// Threshold below which the sorted diagonal is provably the optimal
// assignment: for ratios s >= t and adjacent exponents p <= q, the exchange
// s^p + t^q >= s^q + t^p holds whenever s <= (p/q)^{1/(q-p)}, and the bound
// for non-adjacent positions dominates the adjacent minimum.
double monge_threshold(const std::vector<double>& exps) {
  double best = kInf;
  for (size_t k = 0; k + 1 < exps.size(); ++k) {
    double p = exps[k], q = exps[k + 1];
    if (q > p) best = std::min(best, std::pow(p / q, 1.0 / (q - p)));
  }
  return best;
}

double nakano_sup_double(std::vector<double> ratios, const std::vector<double>& exps) {
  size_t n = ratios.size();
  if (n == 0) return 0.0;
  std::sort(ratios.begin(), ratios.end(), std::greater<double>());
  if (ratios.front() == ratios.back() ||
      ratios.front() <= monge_threshold(exps) * (1 - 1e-9)) {
    double sum = 0;
    for (size_t i = 0; i < n; ++i) sum += std::pow(ratios[i], exps[i]);
    return sum;
  }
  std::vector<std::vector<double>> cost(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) cost[i][k] = std::pow(ratios[i], exps[k]);
  return assignment_max_double(cost);
}

Rational nakano_sup_exact(std::vector<Rational> ratios, const std::vector<long>& exps) {
  size_t n = ratios.size();
  if (n == 0) return Rational(0);
  std::sort(ratios.begin(), ratios.end(), std::greater<Rational>());
  bool diagonal = ratios.front() == ratios.back();
  if (!diagonal) {
    std::vector<double> de(exps.begin(), exps.end());
    diagonal = to_double(ratios.front()) <= monge_threshold(de) * (1 - 1e-9);
  }
  if (diagonal) {
    Rational sum = 0;
    for (size_t i = 0; i < n; ++i) sum += rat_pow(ratios[i], exps[i]);
    return sum;
  }
  if (n > 16)
    throw validation_error(
        "exact Nakano assignment capped at 16 support points; use float mode");
  return assignment_max_exact<Rational>(
      n, [&](size_t i, size_t slot) { return rat_pow(ratios[i], exps[slot - 1]); });
}

// Exponents usable in the exact lane: rational-valued, integral, and small
// enough that exact powers stay cheap.
std::optional<std::vector<long>> exact_exponents(const ExponentSeq& p, size_t n) {
  std::vector<long> out;
  out.reserve(n);
  for (size_t k = 1; k <= n; ++k) {
    auto e = p.exact_at(k);
    if (!e || denominator(*e) != 1) return std::nullopt;
    BigInt num = numerator(*e);
    if (num < 1 || num > 10000) return std::nullopt;
    out.push_back(num.convert_to<long>());
  }
  return out;
}

Value nakano_modular(const FinVec& x, const ExponentSeq& p, const Value& rho) {
  size_t n = x.support_size();
  if (rho.exact()) {
    auto exps = exact_exponents(p, n);
    if (exps) {
      std::vector<Rational> small;
      std::vector<Rational> big;
      for (const auto& [label, value] : x.entries()) {
        Rational t = rat_abs(value) / rho.rat();
        (t > 1 ? big : small).push_back(t);
      }
      Rational big_sum = 0;
      if (!big.empty()) {
        if (!p.bounded()) return Value(kInf);
        auto sup = p.exact_at(std::numeric_limits<size_t>::max());
        if (sup && denominator(*sup) == 1 && numerator(*sup) <= 10000) {
          long P = numerator(*sup).convert_to<long>();
          for (const auto& t : big) big_sum += rat_pow(t, P);
        } else {
          exps.reset();  // sup exponent not exactly representable
        }
      }
      if (exps) {
        exps->resize(small.size());
        return Value(nakano_sup_exact(std::move(small), *exps) + big_sum);
      }
    }
  }
  // binary64 lane
  double r = rho.as_double();
  std::vector<double> small;
  double big_sum = 0;
  bool any_big = false;
  for (const auto& [label, value] : x.entries()) {
    double t = std::abs(to_double(value)) / r;
    if (t > 1) {
      any_big = true;
      if (!p.bounded()) return Value(kInf);
      big_sum += std::pow(t, p.sup());
    } else {
      small.push_back(t);
    }
  }
  (void)any_big;
  std::vector<double> exps;
  exps.reserve(small.size());
  for (size_t k = 1; k <= small.size(); ++k) exps.push_back(p.at(k));
  return Value(nakano_sup_double(std::move(small), exps) + big_sum);
}

}  // namespace

Value modular_value(const FinVec& x, const SpaceSpec& spec, const Value& rho) {
  bool positive = rho.exact() ? rho.rat() > 0 : rho.as_double() > 0;
  if (!positive) throw validation_error("modular scale rho must be positive");
  if (x.empty()) return Value(Rational(0));
  switch (spec.kind) {
    case SpaceKind::Orlicz: {
      double r = rho.as_double();
      double sum = 0;
      for (const auto& [label, value] : x.entries())
        sum += spec.M->eval(std::abs(to_double(value)) / r);
      return Value(sum);
    }
    case SpaceKind::Nakano:
      return nakano_modular(x, *spec.p, rho);
    default:
      throw validation_error("modular_value needs an Orlicz or Nakano space");
  }
}

LuxemburgResult luxemburg_solve(const FinVec& x, const SpaceSpec& spec) {
  if (spec.kind != SpaceKind::Orlicz && spec.kind != SpaceKind::Nakano)
    throw validation_error("luxemburg_norm needs an Orlicz or Nakano space");
  if (x.empty()) return {0.0, 0.0, 0.0};
  auto modular_at = [&](double rho) {
    return modular_value(x, spec, Value(rho)).as_double();
  };
  double hi = to_double(linf_norm(x));
  double m = modular_at(hi);
  if (m == 1.0) return {hi, hi, hi};
  int steps = 0;
  while (m > 1.0) {
    if (++steps > 64)
      throw numeric_error("Luxemburg bracket: modular stays above 1 within 2^64 upscaling");
    hi *= 2;
    m = modular_at(hi);
    if (m == 1.0) return {hi, hi, hi};
  }
  // Downscaling treats m == 1 as "not above 1" deliberately: a degenerate
  // modular can saturate at 1.0 in rounding (e^{-eps} rounds to 1), and an
  // exact-hit return here would report that plateau as a root. Genuine
  // isolated roots survive; the bisection below still lands on them.
  double lo = hi / 2;
  steps = 0;
  while (true) {
    m = modular_at(lo);
    if (m > 1.0) break;
    hi = lo;
    lo /= 2;
    if (++steps > 64)
      throw numeric_error(
          "Luxemburg bracket: modular never reaches 1 within 2^64 downscaling "
          "(degenerate Orlicz function)");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    m = modular_at(mid);
    if (m == 1.0) return {mid, mid, mid};
    (m > 1.0 ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), lo, hi};
}

double luxemburg_norm(const FinVec& x, const SpaceSpec& spec) {
  return luxemburg_solve(x, spec).value;
}

double orlicz_inverse(const OrliczFn& M, double y) {
  if (!(y > 0)) throw validation_error("orlicz_inverse needs y > 0");
  if (M.kind() == OrliczFn::Kind::ExpReciprocal &&
      M.extension() == ExtensionRule::Analytic && y > 1)
    throw validation_error("y beyond the reach of the analytic extension (sup M = 1)");
  return M.inverse(y);
}

namespace {

FinVec all_ones(size_t n) {
  FinVec f;
  for (size_t k = 1; k <= n; ++k) f.set("g" + std::to_string(k), Rational(1));
  return f;
}

}  // namespace

FundamentalPair fundamental_functions(const SpaceSpec& spec, size_t n) {
  if (n < 1) throw validation_error("fundamental functions need n >= 1");
  switch (spec.kind) {
    case SpaceKind::LorentzPredual: {
      Rational mu = spec.weights->prefix_sum(n);
      return {Value(Rational(BigInt(n)) / mu), Value(mu)};
    }
    case SpaceKind::LorentzDual: {
      Rational lambda = spec.weights->prefix_sum(n);
      return {Value(lambda), Value(Rational(BigInt(n)) / lambda)};
    }
    case SpaceKind::Counting:
      return {Value(Rational(1)), Value(Rational(BigInt(n)))};
    case SpaceKind::Orlicz: {
      double inv = orlicz_inverse(*spec.M, 1.0 / double(n));
      if (!std::isfinite(inv) || inv == 0)
        throw numeric_error("degenerate fundamental function (M^{-1} not finite-positive)");
      double lambda = 1.0 / inv;
      return {Value(lambda), Value(double(n) / lambda)};
    }
    case SpaceKind::Nakano: {
      double lambda = luxemburg_solve(all_ones(n), spec).value;
      return {Value(lambda), Value(double(n) / lambda)};
    }
  }
  throw validation_error("unknown space kind");
}

Value norm_value(const SpaceSpec& spec, const FinVec& f) {
  switch (spec.kind) {
    case SpaceKind::LorentzPredual:
      return Value(lorentz_predual_norm(f, *spec.weights));
    case SpaceKind::LorentzDual:
      return Value(lorentz_dual_norm(f, *spec.weights));
    case SpaceKind::Counting:
      return Value(linf_norm(f));
    case SpaceKind::Orlicz:
    case SpaceKind::Nakano:
      return Value(luxemburg_norm(f, spec));
  }
  throw validation_error("unknown space kind");
}

}  // namespace symba
