#include "doctest.h"
#include "test_util.hpp"

using namespace valuix;
using namespace testutil;

TEST_CASE("monomial ideal minimization and errors") {
  auto a = I(2, {{2, 0}, {3, 1}, {0, 3}, {2, 0}});
  CHECK(a.generators() == std::vector<IntVec>{{0, 3}, {2, 0}});
  CHECK_THROWS_AS(I(2, {}), Error);
  CHECK_THROWS_AS(I(2, {{1, -1}}), Error);
  CHECK_THROWS_AS(I(2, {{1, 1, 1}}), Error);
  CHECK(MonomialIdeal::unit(3).is_unit());
  CHECK(a.contains(IntVec{2, 5}));
  CHECK_FALSE(a.contains(IntVec{1, 2}));
  CHECK(power(MonomialIdeal::maximal(2), 2) == I(2, {{2, 0}, {1, 1}, {0, 2}}));
}

TEST_CASE("is_primary") {
  CHECK(I(2, {{1, 0}, {0, 2}}).is_primary());
  CHECK_FALSE(I(2, {{1, 1}}).is_primary());
  CHECK(I(2, {{2, 0}, {1, 1}, {0, 5}}).is_primary());
  CHECK(region_of(I(2, {{2, 0}, {1, 1}, {0, 5}})).has_bounded_complement());
  CHECK_FALSE(region_of(I(2, {{1, 1}})).has_bounded_complement());
}

TEST_CASE("region_of") {
  CHECK(region_of(MonomialIdeal::maximal(2)) == R({{1, 0}, {0, 1}}));
  CHECK(region_of(I(2, {{2, 0}, {0, 3}})) == R({{2, 0}, {0, 3}}));
  CHECK(region_of(I(2, {{1, 1}})) == R({{1, 1}}));
}

TEST_CASE("transform examples") {
  auto u1 = PshGerm::log_of(I(2, {{2, 0}, {0, 3}}));
  CHECK(transform(u1).region() == R({{2, 0}, {0, 3}}));
  CHECK(transform(u1)(v({1, 1})) == -2);

  auto u2 = PshGerm::log_of(MonomialIdeal::maximal(2), 2);
  CHECK(transform(u2).region() == scale(R({{1, 0}, {0, 1}}), 2));
  CHECK(transform(u2)(v({2, 1})) == -2);

  auto u3 = PshGerm::log_of(I(2, {{1, 0}, {0, 2}})) + PshGerm::log_of(MonomialIdeal::maximal(2));
  CHECK(transform(u3).region() == R({{2, 0}, {1, 1}, {0, 3}}));
  CHECK(transform(u3)(v({2, 1})) == -3);
  CHECK_THROWS_AS(PshGerm(2, {{Rat(0), MonomialIdeal::maximal(2)}}), Error);
}

TEST_CASE("lelong_number examples") {
  CHECK(lelong_number(PshGerm::log_of(I(2, {{2, 0}, {0, 3}}))) == 2);
  CHECK(lelong_number(PshGerm::log_of(MonomialIdeal::maximal(2), Rat(7, 3))) == Rat(7, 3));
  CHECK(lelong_number(PshGerm::log_of(I(2, {{1, 0}, {0, 2}}))) == 1);
}

TEST_CASE("divisor_max and divisor_sum") {
  auto gx = FormalPshToric::log_of(I(2, {{2, 0}}));
  auto gy = FormalPshToric::log_of(I(2, {{0, 3}}));
  CHECK(divisor_max(gx, gy) == FormalPshToric::log_of(I(2, {{2, 0}, {0, 3}})));
  CHECK(divisor_max(gx, gx) == gx);
  CHECK(divisor_max(gx, FormalPshToric::zero(2)).is_zero());

  auto m = FormalPshToric::log_of(MonomialIdeal::maximal(2));
  auto s = divisor_sum(m, m);
  CHECK(s.region() == R({{2, 0}, {1, 1}, {0, 2}}));
  CHECK(s(v({1, 1})) == -2);
  auto t = divisor_sum(FormalPshToric::log_of(I(2, {{2, 0}, {0, 3}})),
                       FormalPshToric::log_of(I(2, {{3, 0}, {0, 2}})));
  CHECK(t(v({1, 1})) == -4);
  CHECK(divisor_sum(m, FormalPshToric::zero(2)) == m);
  CHECK_THROWS_AS(divisor_sum(m, FormalPshToric::zero(3)), Error);
}

TEST_CASE("property: ideal operations match region operations") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto a = random_ideal(rng, n, trial % 2 == 0);
    auto b = random_ideal(rng, n, false);
    CHECK(divisor_sum(FormalPshToric::log_of(a), FormalPshToric::log_of(b)) ==
          FormalPshToric::log_of(product(a, b)));
    CHECK(divisor_max(FormalPshToric::log_of(a), FormalPshToric::log_of(b)) ==
          FormalPshToric::log_of(ideal_sum(a, b)));
    CHECK(a.is_primary() == region_of(a).has_bounded_complement());
  }
}

TEST_CASE("property: transform is a homomorphism") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto u = random_germ(rng, n, false);
    auto w = random_germ(rng, n, trial % 2 == 0);
    CHECK(transform(u + w) == divisor_sum(transform(u), transform(w)));
  }
}

TEST_CASE("property: Izumi sandwich and convexity of the transform") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 3;
    auto g = transform(random_germ(rng, n, trial % 2 == 0));
    RatVec ones(n, Rat(1));
    Rat gm = g(ones);
    CHECK(gm <= 0);
    for (int k = 0; k < 4; ++k) {
      auto w = random_normalized(rng, n);
      Rat c = *std::max_element(w.begin(), w.end());
      CHECK(g(w) <= gm);
      CHECK(g(w) >= c * gm);
      auto w2 = random_normalized(rng, n);
      RatVec mid = scaled(add(w, w2), Rat(1, 2));
      CHECK(2 * g(mid) <= g(w) + g(w2));
    }
    // dichotomy: zero function, or strictly negative at the order valuation
    CHECK((g.is_zero() ? gm == 0 : gm < 0));
  }
}
