#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <symba/approx.hpp>
#include <symba/space.hpp>

#include <vector>

#include "helpers.hpp"

using namespace symba;
using symba::testing::Rng;

namespace {

RhoProvider lorentz_provider() {
  return RhoProvider::symmetric(SpaceSpec::lorentz_predual(WeightSeq::harmonic()));
}

// Independent evaluation of theta for the Lorentz provider: gaps against
// prefix sums of the weights, nothing shared with rho_value.
Rational theta_abel_oracle(const FinVec& f, const WeightSeq& w) {
  RangeProfile prof = range_profile(f);
  Rational total = 0;
  for (size_t k = 0; k < prof.levels(); ++k) {
    Rational mu = 0;
    for (size_t i = 1; i <= prof.G[k].size(); ++i) mu += w.at(i);
    total += prof.q[k] * mu;
  }
  return total;
}

std::vector<RhoProvider> sample_providers() {
  std::vector<RhoProvider> providers;
  providers.push_back(RhoProvider::counting());
  providers.push_back(lorentz_provider());
  std::vector<Rational> table;
  Rational acc = 0;
  for (int k = 1; k <= 12; ++k) {
    acc += Rational(BigInt(2), BigInt(k + 1));
    table.push_back(acc);
  }
  providers.push_back(RhoProvider::table_values(std::move(table)));
  return providers;
}

}  // namespace

TEST_CASE("range profile sorts distinct magnitudes with nested level sets") {
  RangeProfile prof = range_profile(FinVec::parse("a=3,b=2,c=2,d=1"));
  REQUIRE(prof.levels() == 3);
  CHECK(prof.p == std::vector<Rational>{Rational(3), Rational(2), Rational(1)});
  CHECK(prof.q == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
  REQUIRE(prof.G.size() == 3);
  CHECK(prof.G[0] == std::vector<Label>{"a"});
  CHECK(prof.G[1] == std::vector<Label>{"a", "b", "c"});
  CHECK(prof.G[2] == std::vector<Label>{"a", "b", "c", "d"});
  CHECK(prof.H[0] == std::vector<Label>{"a"});
  CHECK(prof.H[1] == std::vector<Label>{"b", "c"});
  CHECK(prof.H[2] == std::vector<Label>{"d"});

  CHECK(range_profile(FinVec()).levels() == 0);

  RangeProfile tied = range_profile(FinVec::parse("a=5,b=5"));
  REQUIRE(tied.levels() == 1);
  CHECK(tied.p[0] == Rational(5));
  CHECK(tied.q[0] == Rational(5));
  CHECK(tied.G[0].size() == 2);
}

TEST_CASE("range profile invariants hold on random vectors") {
  Rng rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    FinVec f = rng.finvec(8);
    RangeProfile prof = range_profile(f);
    Rational gap_sum = 0;
    for (size_t k = 0; k < prof.levels(); ++k) {
      CHECK(prof.p[k] > 0);
      CHECK(prof.q[k] > 0);
      if (k + 1 < prof.levels()) {
        CHECK(prof.p[k] > prof.p[k + 1]);
        CHECK(prof.q[k] == prof.p[k] - prof.p[k + 1]);
        CHECK(prof.G[k].size() < prof.G[k + 1].size());
      } else {
        CHECK(prof.q[k] == prof.p[k]);
        CHECK(prof.G[k].size() == f.support_size());
      }
      gap_sum += prof.q[k];
    }
    if (prof.levels() > 0) CHECK(gap_sum == prof.p[0]);
  }
}

TEST_CASE("rho providers pin the worked values") {
  CHECK(rho_value(RhoProvider::counting(), 4) == Rational(4));
  CHECK(rho_value(lorentz_provider(), 2) == Rational(3, 2));
  for (const auto& provider : sample_providers()) CHECK(rho_value(provider, 0) == Rational(0));

  RhoProvider table = RhoProvider::table_values({Rational(1), Rational(3, 2)});
  CHECK(rho_value(table, 2) == Rational(3, 2));
  CHECK_THROWS_AS(rho_value(table, 3), validation_error);
  CHECK_THROWS_AS(RhoProvider::table_values({Rational(1), Rational(1, 2)}), validation_error);
  CHECK_THROWS_AS(RhoProvider::table_values({Rational(0)}), validation_error);
  CHECK_THROWS_AS(RhoProvider::symmetric(SpaceSpec::orlicz(OrliczFn::power(2))),
                  validation_error);
}

TEST_CASE("rho is non-decreasing for every provider") {
  for (const auto& provider : sample_providers()) {
    Rational prev = 0;
    for (size_t size = 1; size <= 12; ++size) {
      Rational cur = rho_value(provider, size);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("symmetric rho is the exact supremum over the indicator orbit") {
  // Scaled sign patterns on F never beat the plain indicator in the dual norm.
  WeightSeq w = WeightSeq::harmonic();
  RhoProvider provider = lorentz_provider();
  Rng rng(808);
  for (size_t size = 1; size <= 4; ++size) {
    Rational rho = rho_value(provider, size);
    FinVec indicator;
    for (size_t i = 0; i < size; ++i) indicator.set("x" + std::to_string(i), Rational(1));
    CHECK(lorentz_dual_norm(indicator, w) == rho);
    for (int trial = 0; trial < 50; ++trial) {
      FinVec g;
      for (size_t i = 0; i < size; ++i) {
        Rational scale = Rational(BigInt(rng.next(4) + 1), BigInt(4));
        g.set("x" + std::to_string(i), rng.next(2) ? scale : -scale);
      }
      CHECK(lorentz_dual_norm(g, w) <= rho);
    }
  }
}

TEST_CASE("theta pins the worked values") {
  FinVec f = FinVec::parse("a=3,b=2,c=2,d=1");
  ThetaBreakdown counting = theta_breakdown(f, RhoProvider::counting());
  CHECK(counting.theta == Rational(8));
  CHECK(counting.rho == std::vector<Rational>{Rational(1), Rational(3), Rational(4)});
  CHECK(counting.terms == std::vector<Rational>{Rational(1), Rational(3), Rational(4)});
  CHECK(counting.theta == l1_norm(f));

  CHECK(theta_value(FinVec::parse("a=2,b=1"), lorentz_provider()) == Rational(5, 2));
  CHECK(theta_value(FinVec(), RhoProvider::counting()) == Rational(0));
}

TEST_CASE("theta equals the norm it mirrors, against the Abel oracle") {
  Rng rng(99);
  WeightSeq w = WeightSeq::harmonic();
  RhoProvider lorentz = lorentz_provider();
  RhoProvider counting = RhoProvider::counting();
  for (int trial = 0; trial < 400; ++trial) {
    FinVec f = rng.finvec(9);
    Rational theta_lorentz = theta_value(f, lorentz);
    CHECK(theta_lorentz == theta_abel_oracle(f, w));
    CHECK(theta_lorentz == lorentz_dual_norm(f, w));
    CHECK(theta_value(f, counting) == l1_norm(f));
  }
}

TEST_CASE("theta dominates the dual norm") {
  Rng rng(123);
  WeightSeq w = WeightSeq::harmonic();
  for (int trial = 0; trial < 200; ++trial) {
    FinVec f = rng.finvec(9);
    CHECK(lorentz_dual_norm(f, w) <= theta_value(f, lorentz_provider()));
    CHECK(l1_norm(f) <= theta_value(f, RhoProvider::counting()));
  }
}

TEST_CASE("theta is absolutely homogeneous and levels are scale-invariant") {
  Rng rng(321);
  for (int trial = 0; trial < 100; ++trial) {
    FinVec f = rng.finvec(7);
    Rational t = rng.rational();
    for (const auto& provider : sample_providers()) {
      CHECK(theta_value(f.scaled(t), provider) == rat_abs(t) * theta_value(f, provider));
    }
    RangeProfile base = range_profile(f);
    RangeProfile scaled = range_profile(f.scaled(t));
    REQUIRE(base.levels() == scaled.levels());
    for (size_t k = 0; k < base.levels(); ++k) CHECK(base.G[k] == scaled.G[k]);
  }
}

TEST_CASE("omega is the sign vector of a level set") {
  FinVec f = FinVec::parse("a=3,b=2,c=2,d=1");
  CHECK(omega(f, 2) == FinVec::parse("a=1,b=1,c=1"));
  CHECK(omega(FinVec::parse("a=-2"), 1) == FinVec::parse("a=-1"));
  CHECK(omega(FinVec::parse("a=5,b=5"), 1) == FinVec::parse("a=1,b=1"));
  CHECK_THROWS_AS(omega(f, 0), validation_error);
  CHECK_THROWS_AS(omega(f, 4), validation_error);
  CHECK_THROWS_AS(omega(FinVec(), 1), validation_error);
}

TEST_CASE("h pins the worked values and saturates past the last level") {
  FinVec f = FinVec::parse("a=2,b=1");
  CHECK(h_functional(f, 1) == FinVec::parse("a=1"));
  CHECK(h_functional(f, 2) == f);
  CHECK(h_functional(f, 9) == f);
  CHECK(h_functional(FinVec::parse("a=3,b=2,c=2,d=1"), 1) == FinVec::parse("a=1"));
  CHECK(h_functional(FinVec(), 3) == FinVec());
}

TEST_CASE("h matches its closed form on random vectors") {
  Rng rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    FinVec f = rng.finvec(8);
    RangeProfile prof = range_profile(f);
    for (size_t m = 1; m <= prof.levels(); ++m) {
      FinVec closed;
      for (const auto& label : prof.G[m - 1]) closed.set(label, f.at(label));
      Rational p_next = m < prof.levels() ? prof.p[m] : Rational(0);
      closed = closed - omega(f, m).scaled(p_next);
      CHECK(h_functional(f, m) == closed);
    }
  }
}

TEST_CASE("g pins the worked values") {
  RhoProvider counting = RhoProvider::counting();
  CHECK(g_functional(FinVec::parse("a=2,b=1"), 1, 2, counting) == FinVec::parse("a=1,b=1"));
  CHECK(g_functional(FinVec::parse("a=3,b=2,c=2,d=1"), 1, 2, counting) ==
        FinVec::parse("a=7/3,b=7/3,c=7/3"));
  CHECK(g_functional(FinVec::parse("a=2,b=1"), 2, 3, counting) == FinVec());
  CHECK_THROWS_AS(g_functional(FinVec::parse("a=2,b=1"), 2, 2, counting), validation_error);
}

TEST_CASE("j pins the worked values") {
  RhoProvider counting = RhoProvider::counting();
  FinVec f = FinVec::parse("a=2,b=1");
  CHECK(j_functional(f, 1, 2, counting) == f);
  CHECK(j_functional(FinVec::parse("a=3,b=2,c=2,d=1"), 1, 2, counting) ==
        FinVec::parse("a=10/3,b=7/3,c=7/3"));
  CHECK(j_functional(f, 2, 5, counting) == f);
}

TEST_CASE("convex weights pin the worked values") {
  RhoProvider counting = RhoProvider::counting();
  auto w1 = convex_weights(FinVec::parse("a=3,b=2,c=2,d=1"), 1, counting);
  REQUIRE(w1.size() == 2);
  CHECK(w1.at(2) == Rational(3, 7));
  CHECK(w1.at(3) == Rational(4, 7));

  auto w2 = convex_weights(FinVec::parse("a=2,b=1"), 2, counting);
  REQUIRE(w2.size() == 1);
  CHECK(w2.at(3) == Rational(1));

  auto w3 = convex_weights(FinVec::parse("a=2,b=1"), 1, counting);
  REQUIRE(w3.size() == 1);
  CHECK(w3.at(2) == Rational(1));
}

TEST_CASE("reconstruction pins the worked values") {
  RhoProvider counting = RhoProvider::counting();
  FinVec f = FinVec::parse("a=3,b=2,c=2,d=1");
  auto [rec, residual] = reconstruct(f, 1, counting);
  CHECK(rec == f);
  CHECK(residual == Rational(0));

  auto empty = reconstruct(FinVec(), 1, counting);
  CHECK(empty.reconstruction == FinVec());
  CHECK(empty.residual_norm == Rational(0));

  auto lorentz = reconstruct(FinVec::parse("a=2,b=1"), 1, lorentz_provider());
  CHECK(lorentz.reconstruction == FinVec::parse("a=2,b=1"));
  CHECK(lorentz.residual_norm == Rational(0));
}

TEST_CASE("reconstruction is exact for random vectors, all providers, all m") {
  Rng rng(2024);
  auto providers = sample_providers();
  for (int trial = 0; trial < 250; ++trial) {
    FinVec f = rng.finvec(12);
    size_t levels = range_profile(f).levels();
    for (size_t m = 1; m <= levels; ++m) {
      const auto& provider = providers[trial % providers.size()];
      auto weights = convex_weights(f, m, provider);
      Rational sum = 0;
      for (const auto& [n, lambda] : weights) {
        CHECK(lambda >= 0);
        sum += lambda;
      }
      CHECK(sum == Rational(1));
      auto [rec, residual] = reconstruct(f, m, provider);
      CHECK(residual == Rational(0));
      CHECK(rec == f);
    }
  }
}

TEST_CASE("tail bound pins the worked values") {
  RhoProvider counting = RhoProvider::counting();
  FinVec f = FinVec::parse("a=3,b=2,c=2,d=1");
  CHECK(tail_bound(f, 1, counting) == Rational(7));
  CHECK(l1_norm(f - h_functional(f, 1)) == Rational(7));
  CHECK(tail_bound(FinVec::parse("a=2,b=1"), 2, counting) == Rational(0));
  CHECK(tail_bound(FinVec::parse("a=2,b=1"), 1, lorentz_provider()) == Rational(3, 2));
}

TEST_CASE("tail bound dominates the residual norm") {
  Rng rng(717);
  WeightSeq w = WeightSeq::harmonic();
  RhoProvider counting = RhoProvider::counting();
  RhoProvider lorentz = lorentz_provider();
  for (int trial = 0; trial < 200; ++trial) {
    FinVec f = rng.finvec(9);
    size_t levels = range_profile(f).levels();
    for (size_t m = 1; m <= levels; ++m) {
      FinVec tail_vec = f - h_functional(f, m);
      CHECK(l1_norm(tail_vec) <= tail_bound(f, m, counting));
      CHECK(lorentz_dual_norm(tail_vec, w) <= tail_bound(f, m, lorentz));
      // counting case: the bound is attained
      CHECK(l1_norm(tail_vec) == tail_bound(f, m, counting));
    }
  }
}

TEST_CASE("table provider past its horizon is an error inside theta") {
  RhoProvider table = RhoProvider::table_values({Rational(1), Rational(2)});
  CHECK(theta_value(FinVec::parse("a=2,b=1"), table) == Rational(3));
  CHECK_THROWS_AS(theta_value(FinVec::parse("a=3,b=2,c=1"), table), validation_error);
}
