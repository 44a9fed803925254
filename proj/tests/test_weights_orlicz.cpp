#include <doctest.h>

#include <symba/errors.hpp>
#include <symba/exponents.hpp>
#include <symba/orlicz.hpp>
#include <symba/weights.hpp>

#include <cmath>
#include <vector>

using namespace symba;

TEST_CASE("harmonic weights") {
  WeightSeq w = WeightSeq::harmonic();
  CHECK(w.at(1) == Rational(1));
  CHECK(w.at(5) == Rational(1, 5));
  CHECK(w.prefix_sum(3) == Rational(11, 6));
  CHECK(w.prefix_sum(0) == Rational(0));
  auto sums = w.prefix_sums(4);
  REQUIRE(sums.size() == 5);
  CHECK(sums[0] == Rational(0));
  CHECK(sums[4] == Rational(25, 12));
  CHECK(w.horizon() == SIZE_MAX);
}

TEST_CASE("explicit weights rescale to w_1 = 1 and validate shape") {
  WeightSeq w = WeightSeq::explicit_list({Rational(3), Rational(3, 2), Rational(1)});
  CHECK(w.at(1) == Rational(1));
  CHECK(w.at(2) == Rational(1, 2));
  CHECK(w.at(3) == Rational(1, 3));
  CHECK(w.horizon() == 3);
  CHECK_THROWS_AS(w.at(4), validation_error);
  CHECK_THROWS_AS(w.prefix_sum(4), validation_error);

  CHECK_THROWS_AS(WeightSeq::explicit_list({}), validation_error);
  CHECK_THROWS_AS(WeightSeq::explicit_list({Rational(1), Rational(0)}), validation_error);
  CHECK_THROWS_AS(WeightSeq::explicit_list({Rational(1), Rational(-1)}), validation_error);
  CHECK_THROWS_AS(WeightSeq::explicit_list({Rational(1), Rational(2)}), validation_error);
}

TEST_CASE("loglog exponents follow 2*log(log k + 1) + 1") {
  ExponentSeq p = ExponentSeq::loglog();
  CHECK(p.at(1) == 1.0);
  CHECK(p.at(3) == doctest::Approx(2 * std::log(std::log(3.0) + 1) + 1).epsilon(1e-15));
  CHECK_FALSE(p.bounded());
  CHECK(p.sup() == std::numeric_limits<double>::infinity());
  double prev = 0;
  for (size_t k = 1; k <= 1000; ++k) {
    double cur = p.at(k);
    CHECK(cur >= prev);
    prev = cur;
  }
  CHECK(p.exact_at(1).has_value());
  CHECK_FALSE(p.exact_at(3).has_value());
}

TEST_CASE("exponent prefixes overlay the rule") {
  ExponentSeq p = ExponentSeq::loglog({Rational(1), Rational(3, 2)});
  CHECK(p.at(1) == 1.0);
  CHECK(p.at(2) == 1.5);
  CHECK(*p.exact_at(2) == Rational(3, 2));
  CHECK(p.at(3) == doctest::Approx(2 * std::log(std::log(3.0) + 1) + 1));
}

TEST_CASE("explicit exponents continue with their last value and are bounded") {
  ExponentSeq p = ExponentSeq::explicit_list({Rational(1), Rational(2), Rational(3)});
  CHECK(p.at(2) == 2.0);
  CHECK(p.at(5) == 3.0);
  CHECK(*p.exact_at(5) == Rational(3));
  CHECK(p.bounded());
  CHECK(p.sup() == 3.0);

  ExponentSeq linear = ExponentSeq::linear();
  CHECK(linear.at(4) == 4.0);
  CHECK(*linear.exact_at(4) == Rational(4));
  CHECK_FALSE(linear.bounded());

  CHECK_THROWS_AS(ExponentSeq::explicit_list({}), validation_error);
  CHECK_THROWS_AS(ExponentSeq::explicit_list({Rational(1, 2)}), validation_error);
  CHECK_THROWS_AS(ExponentSeq::explicit_list({Rational(2), Rational(1)}), validation_error);
}

TEST_CASE("power Orlicz functions evaluate and invert in closed form") {
  OrliczFn M = OrliczFn::power(2);
  CHECK(M.eval(0.0) == 0.0);
  CHECK(M.eval(0.5) == 0.25);
  CHECK(M.eval(3.0) == 9.0);
  CHECK(M.closed_inverse());
  CHECK(M.inverse(0.25) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(M.inverse(1.0) == doctest::Approx(1.0).epsilon(1e-15));

  OrliczFn M3 = OrliczFn::power(3);
  CHECK(M3.eval(2.0) == 8.0);
  CHECK(M3.inverse(8.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(OrliczFn::power(0), validation_error);
}

TEST_CASE("exp_reciprocal with the analytic continuation") {
  OrliczFn M = OrliczFn::exp_reciprocal();
  CHECK(M.eval(0.0) == 0.0);
  CHECK(M.eval(0.5) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(M.eval(2.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(M.eval(std::numeric_limits<double>::infinity()) == 1.0);
  CHECK(M.closed_inverse());
  CHECK(M.inverse(std::exp(-2.0)) == doctest::Approx(0.5).epsilon(1e-14));
  for (int n = 2; n <= 20; ++n)
    CHECK(M.inverse(1.0 / n) == doctest::Approx(1.0 / std::log(double(n))).epsilon(1e-14));
  CHECK(M.inverse(1.0) == std::numeric_limits<double>::infinity());
}

TEST_CASE("exp_reciprocal with the affine continuation") {
  OrliczFn M = OrliczFn::exp_reciprocal(ExtensionRule::Affine);
  double value_at_cut = std::exp(-2.0);
  double slope_at_cut = 4 * std::exp(-2.0);  // d/dt e^{-1/t} = e^{-1/t}/t^2
  CHECK(M.eval(0.5) == doctest::Approx(value_at_cut).epsilon(1e-15));
  CHECK(M.eval(1.0) == doctest::Approx(value_at_cut + 0.5 * slope_at_cut).epsilon(1e-14));
  CHECK(M.eval(0.25) == doctest::Approx(std::exp(-4.0)).epsilon(1e-15));
  // Above the cut value the inverse must solve the affine branch.
  double y = value_at_cut + 0.5 * slope_at_cut;
  CHECK(M.inverse(y) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(M.inverse(value_at_cut) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("piecewise-linear slopes are products of reciprocal logs") {
  double a1 = 1.0 / std::log(3.0);
  double a2 = a1 / std::log(4.0);
  CHECK(OrliczFn::leung_slope(1) == doctest::Approx(a1).epsilon(1e-15));
  CHECK(OrliczFn::leung_slope(1) == doctest::Approx(0.910239).epsilon(1e-6));
  CHECK(OrliczFn::leung_slope(2) == doctest::Approx(a2).epsilon(1e-15));
  CHECK(OrliczFn::leung_slope(0) == 1.0);
  for (size_t j = 1; j <= 30; ++j)
    CHECK(OrliczFn::leung_slope(j + 1) < OrliczFn::leung_slope(j));
  // Slopes underflow binary64 eventually; the ratio form survives.
  CHECK(OrliczFn::leung_slope(500) == 0.0);
  double r = OrliczFn::leung_slope_ratio(500, 1);
  CHECK(r > 0.0);
  CHECK(r == doctest::Approx(1.0 / std::log(503.0)).epsilon(1e-14));
  for (size_t j = 1; j <= 12; ++j)
    CHECK(OrliczFn::leung_slope_ratio(j, 1) ==
          doctest::Approx(OrliczFn::leung_slope(j + 1) / OrliczFn::leung_slope(j)).epsilon(1e-13));
  CHECK(OrliczFn::leung_slope_ratio(3, 2) ==
        doctest::Approx(OrliczFn::leung_slope(5) / OrliczFn::leung_slope(3)).epsilon(1e-13));
}

TEST_CASE("truncated series values sit inside the dyadic sandwich") {
  for (size_t j = 1; j <= 20; ++j) {
    size_t L = j + 60;
    auto [value, tail] = OrliczFn::leung_M(j, L);
    double aj = OrliczFn::leung_slope(j);
    CHECK(value > 0.0);
    CHECK(tail >= 0.0);
    CHECK(value + tail >= std::ldexp(aj, -int(j) - 1) * (1 - 1e-12));
    CHECK(value + tail <= std::ldexp(aj, -int(j)) * (1 + 1e-12));
  }
}

TEST_CASE("dyadic ratio enclosures are tight and bounded by the slope ratio") {
  for (size_t j = 1; j <= 16; ++j) {
    auto [lo, hi] = OrliczFn::leung_dyadic_ratio(j, 1);
    CHECK(lo <= hi);
    CHECK(lo > 0.0);
    CHECK(hi <= OrliczFn::leung_slope_ratio(j, 1) * (1 + 1e-12));
    // Direct quotient of truncated sums must land inside the enclosure.
    auto num = OrliczFn::leung_M(j + 1, j + 75);
    auto den = OrliczFn::leung_M(j, j + 75);
    double point_lo = num.value / (den.value + den.tail_bound);
    double point_hi = (num.value + num.tail_bound) / den.value;
    CHECK(point_hi >= lo);
    CHECK(point_lo <= hi);
  }
  // The ratio keeps shrinking far past the underflow point of M itself.
  CHECK(OrliczFn::leung_dyadic_ratio(100000, 1).hi <
        OrliczFn::leung_dyadic_ratio(10, 1).lo);
}

TEST_CASE("piecewise-linear evaluation matches the series and stays linear per segment") {
  OrliczFn M = OrliczFn::leung();
  CHECK(M.eval(0.0) == 0.0);
  for (size_t j = 1; j <= 12; ++j) {
    auto [value, tail] = OrliczFn::leung_M(j, j + 80);
    double t = std::ldexp(1.0, -int(j));
    CHECK(M.eval(t) == doctest::Approx(value).epsilon(1e-12));
    CHECK(tail <= 1e-15 * value);
  }
  // Linear interpolation inside one dyadic segment.
  double t1 = 0.55 * std::ldexp(1.0, -3);
  double t2 = 0.95 * std::ldexp(1.0, -3);
  CHECK(M.eval(0.5 * (t1 + t2)) ==
        doctest::Approx(0.5 * (M.eval(t1) + M.eval(t2))).epsilon(1e-14));
  // Unit slope past the declared cut at 1.
  CHECK(M.eval(2.0) == doctest::Approx(M.eval(1.0) + 1.0).epsilon(1e-14));
  // Round trip through the inverse at a knot.
  double y = M.eval(0.125);
  CHECK(M.inverse(y) == doctest::Approx(0.125).epsilon(1e-10));
}

TEST_CASE("orlicz functions are convex on sampled chords") {
  // The analytic continuation of e^{-1/t} has its inflection at the cut, so
  // it is only tested below it; the affine rule is convex everywhere.
  OrliczFn analytic = OrliczFn::exp_reciprocal();
  for (double a : {0.01, 0.1, 0.2}) {
    for (double b : {0.3, 0.4, 0.5}) {
      double mid = 0.5 * (a + b);
      CHECK(analytic.eval(mid) <= 0.5 * (analytic.eval(a) + analytic.eval(b)) + 1e-12);
    }
  }
  for (const OrliczFn& M : {OrliczFn::power(2),
                            OrliczFn::exp_reciprocal(ExtensionRule::Affine),
                            OrliczFn::leung()}) {
    for (double a : {0.01, 0.1, 0.3}) {
      for (double b : {0.5, 0.9, 1.7}) {
        double mid = 0.5 * (a + b);
        CHECK(M.eval(mid) <= 0.5 * (M.eval(a) + M.eval(b)) + 1e-12);
      }
    }
  }
}
