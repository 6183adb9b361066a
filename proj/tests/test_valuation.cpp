#include "doctest.h"
#include "test_util.hpp"

using namespace valuix;
using namespace testutil;

namespace {

Polynomial P(std::size_t n, std::initializer_list<std::pair<IntVec, long>> terms) {
  Polynomial p(n);
  for (const auto& [e, c] : terms) p.add_term(e, Rat(c));
  return p;
}

// z = (x, y - x^2)
ShiftedMonomialValuation parabola(RatVec w) {
  return ShiftedMonomialValuation(TriangularChange({Polynomial(2), P(2, {{{2, 0}, 1}})}), std::move(w));
}

// Independent evaluation: the t-order of f along the curve z_i(t) = c_i t^{w_i}
// with generic c_i, pushed to x-coordinates. Integral weights only.
Rat curve_order(const ShiftedMonomialValuation& nu, const Polynomial& f, std::mt19937_64& rng) {
  const std::size_t n = nu.dim();
  // polynomials in a single variable t: map exponent -> coefficient
  using Uni = std::map<std::int64_t, Rat>;
  auto mul = [](const Uni& a, const Uni& b) {
    Uni out;
    for (auto& [i, x] : a)
      for (auto& [j, y] : b) out[i + j] += x * y;
    std::erase_if(out, [](auto& kv) { return kv.second.is_zero(); });
    return out;
  };
  auto eval = [&](const Polynomial& p, const std::vector<Uni>& xs) {
    Uni out;
    for (const auto& [alpha, coef] : p.terms()) {
      Uni term{{0, coef}};
      for (std::size_t i = 0; i < n; ++i)
        for (std::int64_t k = 0; k < alpha[i]; ++k) term = mul(term, xs[i]);
      for (auto& [e, c] : term) out[e] += c;
    }
    std::erase_if(out, [](auto& kv) { return kv.second.is_zero(); });
    return out;
  };
  std::vector<Uni> xs;
  for (std::size_t i = 0; i < n; ++i) {
    Uni xi{{to_int64(floor_int(nu.weights[i])), Rat(1 + static_cast<long>(rng() % 97))}};
    Uni shift = eval(nu.change.shifts()[i], xs);
    for (auto& [e, c] : shift) xi[e] += c;
    std::erase_if(xi, [](auto& kv) { return kv.second.is_zero(); });
    xs.push_back(xi);
  }
  Uni fx = eval(f, xs);
  REQUIRE_FALSE(fx.empty());
  return Rat(fx.begin()->first);
}

}  // namespace

TEST_CASE("eval_poly examples") {
  CHECK(eval_poly(MonomialValuation(v({1, 1})), P(2, {{{2, 0}, 1}, {{0, 3}, 1}})) == Extended(Rat(2)));
  CHECK(eval_poly(parabola(v({1, 3})), P(2, {{{0, 1}, 1}})) == Extended(Rat(2)));
  CHECK(eval_poly(MonomialValuation(v({2, 5})), Polynomial(2)).is_infinite());
  CHECK(eval_poly(parabola(v({1, 3})), Polynomial(2)).is_infinite());
  CHECK_THROWS_AS(eval_poly(MonomialValuation(v({1, 1})), Polynomial(3)), Error);
  CHECK_THROWS_AS(MonomialValuation(v({1, 0})), Error);
}

TEST_CASE("triangular changes validate shifts") {
  CHECK_THROWS_AS(TriangularChange({P(2, {{{0, 1}, 1}}), Polynomial(2)}), Error);
  CHECK_THROWS_AS(TriangularChange({Polynomial(2), P(2, {{{0, 0}, 1}})}), Error);
  CHECK_THROWS_AS(TriangularChange({Polynomial(2), P(2, {{{1, 1}, 1}})}), Error);
}

TEST_CASE("rewriting respects the degree cap") {
  auto nu = parabola(v({1, 3}));
  nu.max_degree = 10;
  CHECK_THROWS_AS(eval_poly(nu, P(2, {{{0, 6}, 1}})), Error);
  nu.max_degree = 12;
  CHECK(eval_poly(nu, P(2, {{{0, 6}, 1}})) == Extended(Rat(12)));
}

TEST_CASE("eval_ideal examples") {
  CHECK(eval_ideal(MonomialValuation(v({2, 1})), I(2, {{1, 0}, {0, 2}})) == 2);
  CHECK(eval_ideal(MonomialValuation::order(2), I(2, {{2, 0}, {0, 3}})) == 2);
  CHECK(eval_ideal(MonomialValuation(RatVec{Rat(3, 2), Rat(1)}), I(2, {{2, 0}, {0, 3}})) == 3);
  CHECK(eval_ideal(MonomialValuation(v({2, 1})), R({{1, 0}, {0, 2}})) == 2);
  CHECK(eval_ideal(parabola(v({1, 3})), {P(2, {{{0, 1}, 1}}), P(2, {{{3, 0}, 1}})}) == 2);
}

TEST_CASE("normalize and b_value") {
  auto a = normalize(MonomialValuation(v({4, 2})));
  CHECK(a.valuation.weights == v({2, 1}));
  CHECK(a.factor == 2);
  auto b = normalize(MonomialValuation(v({1, 1})));
  CHECK(b.valuation.weights == v({1, 1}));
  CHECK(b.factor == 1);
  auto c = normalize(MonomialValuation(v({3, 2})));
  CHECK(c.valuation.weights == RatVec{Rat(3, 2), Rat(1)});
  CHECK(c.factor == 2);
  CHECK(normalize(c.valuation).factor == 1);
  CHECK(b_value(IntVec{3, 2}) == 2);
  CHECK(b_value(IntVec{1, 1}) == 1);
  CHECK(b_value(IntVec{1, 2, 5}) == 1);
  CHECK(b_value(MonomialValuation(RatVec{Rat(3, 2), Rat(1)})) == 2);
}

TEST_CASE("thinness, kiselman, izumi examples") {
  CHECK(thinness(MonomialValuation::order(3)) == 3);
  CHECK(thinness(MonomialValuation(v({2, 1}))) == 3);
  CHECK(thinness(MonomialValuation(RatVec{Rat(3, 2), Rat(1)})) == Rat(5, 2));
  CHECK(thinness(parabola(v({1, 3}))) == 4);

  auto u = PshGerm::log_of(I(2, {{2, 0}, {0, 3}}));
  CHECK(kiselman(u, v({1, 1})) == 2);
  CHECK(kiselman(u, RatVec{Rat(3, 2), Rat(1)}) == 3);
  CHECK(kiselman(PshGerm::log_of(MonomialIdeal::maximal(2), 2), v({2, 1})) == 2);

  CHECK(izumi_constant(v({1, 1})) == 1);
  CHECK(izumi_constant(v({2, 1})) == 2);
  CHECK(izumi_constant(RatVec{Rat(3, 2), Rat(1)}) == Rat(3, 2));
}

TEST_CASE("monomial_retraction examples") {
  CHECK(monomial_retraction(parabola(v({1, 3}))) == MonomialValuation(v({1, 2})));
  CHECK(monomial_retraction(MonomialValuation(v({2, 1}))) == MonomialValuation(v({2, 1})));
  CHECK(monomial_retraction(parabola(v({1, 1}))) == MonomialValuation(v({1, 1})));
}

TEST_CASE("homotopy examples") {
  auto nu = parabola(v({1, 3}));
  auto f = P(2, {{{0, 1}, 1}, {{2, 0}, -1}});
  for (long num = 0; num <= 12; ++num) {
    Rat s(num, 4);
    CHECK(homotopy_eval(nu, f, s) == std::min(Rat(3), 2 + s));
  }
  CHECK(homotopy_eval(nu, f, 0) == eval_poly(monomial_retraction(nu), f).value());
  CHECK(homotopy_threshold(nu, f) == 1);
  auto mono = MonomialValuation(v({2, 3}));
  auto g = P(2, {{{1, 1}, 2}, {{0, 3}, 1}, {{4, 0}, -1}});
  for (long num = 0; num <= 5; ++num) CHECK(homotopy_eval(mono, g, Rat(num)) == eval_poly(mono, g).value());
  CHECK(homotopy_threshold(ShiftedMonomialValuation(mono), g) == 0);
  CHECK_THROWS_AS(homotopy_eval(nu, Polynomial(2), 1), Error);
  CHECK_THROWS_AS(homotopy_eval(nu, f, -1), Error);
}

namespace {

ShiftedMonomialValuation random_shifted(std::mt19937_64& rng, std::size_t n) {
  std::vector<Polynomial> shifts(n, Polynomial(n));
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = rng() % 3;
    for (std::size_t t = 0; t < k; ++t) {
      IntVec e(n, 0);
      e[rng() % i] = 1 + static_cast<long>(rng() % 2);
      if (rng() % 2 && i > 1) e[rng() % i] += 1;
      shifts[i].add_term(e, Rat(static_cast<long>(rng() % 5) - 2));
    }
  }
  RatVec w(n);
  for (auto& x : w) x = Rat(1 + static_cast<long>(rng() % 4));
  return ShiftedMonomialValuation(TriangularChange(shifts), w);
}

}  // namespace

TEST_CASE("property: shifted evaluation agrees with a generic curve") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto nu = random_shifted(rng, n);
    auto f = random_poly(rng, n);
    if (f.is_zero()) continue;
    CHECK(eval_poly(nu, f).value() == curve_order(nu, f, rng));
  }
}

TEST_CASE("property: valuation axioms") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto nu = random_shifted(rng, n);
    auto f = random_poly(rng, n);
    auto g = random_poly(rng, n);
    CHECK(eval_poly(nu, f * g) == eval_poly(nu, f) + eval_poly(nu, g));
    CHECK(eval_poly(nu, f + g) >= std::min(eval_poly(nu, f), eval_poly(nu, g)));
    // minimality of the order valuation
    if (!f.is_zero()) {
      Rat lambda = *std::min_element(nu.weights.begin(), nu.weights.end());
      CHECK(eval_poly(nu, f).value() >= lambda * eval_poly(MonomialValuation::order(n), f).value());
    }
  }
}

TEST_CASE("property: homotopy monotone, concave, endpoint and stabilization") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto nu = random_shifted(rng, n);
    auto f = random_poly(rng, n);
    if (f.is_zero()) continue;
    CHECK(homotopy_eval(nu, f, 0) == eval_poly(monomial_retraction(nu), f).value());
    Rat th = homotopy_threshold(nu, f);
    Rat full = eval_poly(nu, f).value();
    CHECK(homotopy_eval(nu, f, th) == full);
    CHECK(homotopy_eval(nu, f, th + 3) == full);
    if (th > 0) CHECK(homotopy_eval(nu, f, th / 2) < full);
    Rat prev = homotopy_eval(nu, f, 0);
    for (long k = 1; k <= 8; ++k) {
      Rat s(k, 2);
      Rat cur = homotopy_eval(nu, f, s);
      CHECK(cur >= prev);
      Rat a = homotopy_eval(nu, f, s - Rat(1, 2)), b = homotopy_eval(nu, f, s + Rat(1, 2));
      CHECK(2 * cur >= a + b);
      prev = cur;
    }
  }
}

TEST_CASE("property: homotopy satisfies the valuation axioms at fixed s") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2;
    auto nu = random_shifted(rng, n);
    auto f = random_poly(rng, n, 2);
    auto g = random_poly(rng, n, 2);
    if (f.is_zero() || g.is_zero()) continue;
    Rat s(static_cast<long>(rng() % 9), 2);
    CHECK(homotopy_eval(nu, f * g, s) == homotopy_eval(nu, f, s) + homotopy_eval(nu, g, s));
    auto h = f + g;
    if (!h.is_zero())
      CHECK(homotopy_eval(nu, h, s) >= std::min(homotopy_eval(nu, f, s), homotopy_eval(nu, g, s)));
  }
}

TEST_CASE("property: thinness and Izumi sandwich") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 3;
    auto w = random_normalized(rng, n);
    MonomialValuation nu(w);
    CHECK(thinness(nu) >= Rat(static_cast<long>(n)));
    CHECK((thinness(nu) == Rat(static_cast<long>(n))) == (nu == MonomialValuation::order(n)));
    auto g = FormalPshToric::log_of(random_ideal(rng, n, false)).scaled(random_positive(rng));
    Rat gm = g(RatVec(n, Rat(1)));
    CHECK(izumi_constant(w) * gm <= g(w));
    CHECK(g(w) <= gm);
  }
  CHECK(thinness(MonomialValuation::order(4)) == 4);
}
