#include "symba/orlicz.hpp"

#include <cmath>
#include <limits>

#include "symba/errors.hpp"

namespace symba {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Slopes a_j = prod_{k=1..j} 1/log(k+2), a_0 = 1. Entries past the binary64
// underflow point are exactly 0.
const std::vector<double>& leung_slopes() {
  static const std::vector<double> table = [] {
    std::vector<double> t;
    t.reserve(512);
    double a = 1.0;
    t.push_back(a);
    for (size_t j = 1; j < 512; ++j) {
      a /= std::log(double(j) + 2.0);
      t.push_back(a);
    }
    return t;
  }();
  return table;
}

// M(2^{-j}) for the Leung function, backward recurrence
// M(2^{-j}) = 2^{-j-1} a_j + M(2^{-j-1}).
const std::vector<double>& leung_dyadic() {
  static const std::vector<double> table = [] {
    const auto& a = leung_slopes();
    std::vector<double> t(a.size() + 1, 0.0);
    for (size_t j = a.size(); j-- > 0;) t[j] = std::ldexp(a[j], -int(j) - 1) + t[j + 1];
    return t;
  }();
  return table;
}

}  // namespace

OrliczFn OrliczFn::power(long p) {
  if (p < 1) throw validation_error("power Orlicz function needs exponent >= 1");
  return OrliczFn(Kind::Power, p, kInf, ExtensionRule::Analytic);
}

OrliczFn OrliczFn::exp_reciprocal(ExtensionRule rule, double t_max) {
  if (!(t_max > 0) || t_max > 0.5)
    throw validation_error("exp_reciprocal cut must lie in (0, 1/2]");
  return OrliczFn(Kind::ExpReciprocal, 0, t_max, rule);
}

OrliczFn OrliczFn::leung() { return OrliczFn(Kind::Leung, 0, 1.0, ExtensionRule::Affine); }

std::string OrliczFn::name() const {
  switch (kind_) {
    case Kind::Power:
      return "power:" + std::to_string(p_);
    case Kind::ExpReciprocal:
      return "exp_reciprocal";
    case Kind::Leung:
      return "leung";
  }
  return "";
}

double OrliczFn::eval_raw(double t) const {
  switch (kind_) {
    case Kind::Power: {
      if (p_ == 1) return t;
      if (p_ == 2) return t * t;
      if (p_ == 3) return t * t * t;
      return std::pow(t, double(p_));
    }
    case Kind::ExpReciprocal:
      return t == 0 ? 0.0 : std::exp(-1.0 / t);
    case Kind::Leung: {
      if (t == 0) return 0.0;
      if (std::isinf(t)) return kInf;
      int e;
      std::frexp(t, &e);  // t in [2^{e-1}, 2^e)
      size_t j = size_t(-e);
      const auto& a = leung_slopes();
      const auto& md = leung_dyadic();
      if (j + 1 >= md.size()) return 0.0;  // everything underflows here
      return md[j + 1] + a[j] * (t - std::ldexp(1.0, -int(j) - 1));
    }
  }
  return 0;
}

double OrliczFn::eval(double t) const {
  if (std::isnan(t) || t < 0) throw validation_error("Orlicz function argument must be >= 0");
  if (t <= t_max_ || ext_ == ExtensionRule::Analytic) return eval_raw(t);
  // Affine continuation: value and slope at the cut. Both kinds with a finite
  // cut have a closed left slope.
  double slope;
  switch (kind_) {
    case Kind::ExpReciprocal:
      slope = std::exp(-1.0 / t_max_) / (t_max_ * t_max_);
      break;
    case Kind::Leung:
      slope = 1.0;  // a_0
      break;
    default:
      slope = 0.0;  // Power has no cut, unreachable
  }
  return eval_raw(t_max_) + slope * (t - t_max_);
}

bool OrliczFn::closed_inverse() const {
  return kind_ == Kind::Power ||
         (kind_ == Kind::ExpReciprocal && ext_ == ExtensionRule::Analytic);
}

double OrliczFn::inverse(double y) const {
  if (std::isnan(y) || y < 0) throw validation_error("Orlicz inverse argument must be >= 0");
  if (y == 0) return 0.0;
  switch (kind_) {
    case Kind::Power:
      return std::pow(y, 1.0 / double(p_));
    case Kind::ExpReciprocal:
      if (ext_ == ExtensionRule::Analytic) {
        if (y >= 1) return kInf;  // sup of e^{-1/t} over t < inf is 1
        return -1.0 / std::log(y);
      }
      if (y <= eval_raw(t_max_)) return -1.0 / std::log(y);
      return t_max_ + (y - eval_raw(t_max_)) /
                          (std::exp(-1.0 / t_max_) / (t_max_ * t_max_));
    case Kind::Leung:
      break;
  }
  // Numeric path: M is strictly increasing wherever it is positive.
  double hi = 1.0;
  int guard = 0;
  while (eval(hi) < y) {
    hi *= 2;
    if (++guard > 1100) throw numeric_error("Orlicz inverse bracket did not close");
  }
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (eval(mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

double OrliczFn::leung_slope(size_t j) {
  const auto& a = leung_slopes();
  return j < a.size() ? a[j] : 0.0;
}

double OrliczFn::leung_slope_ratio(size_t j, size_t m) {
  double r = 1.0;
  for (size_t k = j + 1; k <= j + m; ++k) r /= std::log(double(k) + 2.0);
  return r;
}

OrliczFn::LeungValue OrliczFn::leung_M(size_t j, size_t L) {
  if (L <= j) throw validation_error("leung_M needs truncation L > j");
  double value = 0.0;
  for (size_t l = L + 1; l-- > j;) value += std::ldexp(leung_slope(l), -int(l) - 1);
  return {value, std::ldexp(leung_slope(L), -int(L))};
}

OrliczFn::Interval OrliczFn::leung_dyadic_ratio(size_t j, size_t m) {
  // M(2^{-j}) = 2^{-j-1} a_j T_j with T_j = sum_i 2^{-i} a_{j+i}/a_j in [1, 2);
  // truncating T at i = 70 leaves a tail below 2^{-70}.
  constexpr size_t kTerms = 70;
  auto T = [](size_t base) {
    double sum = 0.0, r = 1.0;
    for (size_t i = 0; i <= kTerms; ++i) {
      if (i > 0) r /= std::log(double(base + i) + 2.0);
      sum += std::ldexp(r, -int(i));
    }
    return Interval{sum, sum + std::ldexp(1.0, -int(kTerms))};
  };
  Interval tj = T(j), tjm = T(j + m);
  double sr = leung_slope_ratio(j, m);
  double scale = std::ldexp(sr, -int(m));
  // Widen by a few ulps so binary64 rounding cannot puncture the enclosure.
  return {scale * (tjm.lo / tj.hi) * (1 - 1e-14), scale * (tjm.hi / tj.lo) * (1 + 1e-14)};
}

}  // namespace symba
