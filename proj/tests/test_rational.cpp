#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <symba/rational.hpp>
#include <symba/value.hpp>

#include <cmath>
#include <limits>

using namespace symba;

TEST_CASE("parse_rational round trips and canonicalizes") {
  CHECK(to_string(parse_rational("5/2")) == "5/2");
  CHECK(to_string(parse_rational("-3/4")) == "-3/4");
  CHECK(to_string(parse_rational("0")) == "0");
  CHECK(to_string(parse_rational("17")) == "17");
  CHECK(to_string(parse_rational("+7/3")) == "7/3");
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("0/9")) == "0");
  CHECK(to_string(parse_rational("  12/8\t")) == "3/2");
  CHECK(parse_rational("123456789012345678901234567890/3") ==
        Rational(BigInt("123456789012345678901234567890"), BigInt(3)));
}

TEST_CASE("parse_rational rejects malformed literals") {
  CHECK_THROWS_AS(parse_rational(""), validation_error);
  CHECK_THROWS_AS(parse_rational("   "), validation_error);
  CHECK_THROWS_AS(parse_rational("abc"), validation_error);
  CHECK_THROWS_AS(parse_rational("1.5"), validation_error);
  CHECK_THROWS_AS(parse_rational("2/"), validation_error);
  CHECK_THROWS_AS(parse_rational("/3"), validation_error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), validation_error);
  CHECK_THROWS_AS(parse_rational("1/-2"), validation_error);
  CHECK_THROWS_AS(parse_rational("1/0"), validation_error);
  CHECK_THROWS_AS(parse_rational("1e3"), validation_error);
}

TEST_CASE("rat_pow handles signs and negative exponents") {
  CHECK(rat_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rat_pow(Rational(2, 3), 0) == Rational(1));
  CHECK(rat_pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(rat_pow(Rational(-2), 3) == Rational(-8));
  CHECK(rat_pow(Rational(-2), 2) == Rational(4));
  CHECK(rat_pow(Rational(0), 5) == Rational(0));
  CHECK_THROWS_AS(rat_pow(Rational(0), -1), numeric_error);
}

TEST_CASE("rat_abs and rat_sign") {
  CHECK(rat_abs(Rational(-5, 2)) == Rational(5, 2));
  CHECK(rat_abs(Rational(5, 2)) == Rational(5, 2));
  CHECK(rat_sign(Rational(-1, 7)) == -1);
  CHECK(rat_sign(Rational(0)) == 0);
  CHECK(rat_sign(Rational(3)) == 1);
}

TEST_CASE("to_double is exact on representable rationals") {
  CHECK(to_double(Rational(1, 2)) == 0.5);
  CHECK(to_double(Rational(-3, 4)) == -0.75);
  CHECK(to_double(Rational(1, 3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("format_float round trips binary64 and names the specials") {
  CHECK(format_float(1.0) == "1");
  CHECK(format_float(2.5) == "2.5");
  CHECK(format_float(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_float(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_float(std::numeric_limits<double>::quiet_NaN()) == "nan");
  double x = 0.1;
  CHECK(std::stod(format_float(x)) == x);
  double y = 1.6349839001848923;
  CHECK(std::stod(format_float(y)) == y);
}

TEST_CASE("Value keeps the exact/float distinction") {
  Value exact{Rational(5, 2)};
  CHECK(exact.exact());
  CHECK(exact.str() == "5/2");
  CHECK(exact.as_double() == 2.5);
  CHECK(exact.rat() == Rational(5, 2));

  Value approx{2.5};
  CHECK_FALSE(approx.exact());
  CHECK(approx.str() == "2.5");
  CHECK(approx.as_double() == 2.5);
  CHECK_THROWS_AS(approx.rat(), numeric_error);

  Value zero;
  CHECK(zero.exact());
  CHECK(zero.str() == "0");
}
