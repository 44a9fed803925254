#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symba/rational.hpp"

namespace symba {

// How M continues past its declared cut t_max. Affine keeps the value and the
// left slope at the cut; analytic keeps the defining formula.
enum class ExtensionRule { Affine, Analytic };

// Convex Orlicz function M with M(0) = 0, normalized to binary64 evaluation.
class OrliczFn {
 public:
  enum class Kind { Power, ExpReciprocal, Leung };

  static OrliczFn power(long p);  // M(t) = t^p, p >= 1, no cut
  static OrliczFn exp_reciprocal(ExtensionRule rule = ExtensionRule::Analytic,
                                 double t_max = 0.5);
  // Piecewise-linear M with slope a_j on [2^{-j-1}, 2^{-j}) where
  // a_j = prod_{k<=j} 1/log(k+2); affine past t_max = 1 with slope a_0 = 1.
  static OrliczFn leung();

  Kind kind() const { return kind_; }
  std::string name() const;
  double t_max() const { return t_max_; }
  ExtensionRule extension() const { return ext_; }
  long power_exponent() const { return p_; }

  double eval(double t) const;  // t >= 0
  // Least t with M(t) = y; +infinity when y is never attained (analytic
  // exp_reciprocal has M < 1 everywhere). Closed form where one exists,
  // otherwise bisection.
  double inverse(double y) const;
  bool closed_inverse() const;

  // Slope a_j of the Leung function; 0 once binary64 underflows (j ~ 350).
  static double leung_slope(size_t j);
  // Ratio a_{j+m}/a_j, safe for j far beyond the underflow point.
  static double leung_slope_ratio(size_t j, size_t m);

  struct LeungValue {
    double value;       // sum_{l=j}^{L} 2^{-l-1} a_l
    double tail_bound;  // a_L 2^{-L}, an upper bound on the dropped tail
  };
  static LeungValue leung_M(size_t j, size_t L);

  struct Interval {
    double lo;
    double hi;
  };
  // Rigorous enclosure of M(2^{-j-m})/M(2^{-j}) in factored form; valid for
  // all j where binary64 holds the slope ratios, far past the point where
  // M itself underflows.
  static Interval leung_dyadic_ratio(size_t j, size_t m);

 private:
  OrliczFn(Kind kind, long p, double t_max, ExtensionRule ext)
      : kind_(kind), p_(p), t_max_(t_max), ext_(ext) {}

  double eval_raw(double t) const;  // formula without the extension rule

  Kind kind_;
  long p_;
  double t_max_;
  ExtensionRule ext_;
};

}  // namespace symba
