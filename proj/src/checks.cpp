#include "valuix/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "valuix/intersection.hpp"
#include "valuix/multiplier.hpp"

namespace valuix {

namespace gen {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat positive_rat(Rng& rng, std::int64_t num_max, std::int64_t den_max) {
  return Rat(uniform(rng, 1, num_max), uniform(rng, 1, den_max));
}

RatVec normalized_weights(Rng& rng, std::size_t n) {
  RatVec w(n);
  for (auto& x : w) x = 1 + Rat(uniform(rng, 0, 6), uniform(rng, 1, 3));
  w[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1))] = 1;
  return w;
}

MonomialIdeal primary_ideal(Rng& rng, std::size_t n, std::int64_t max_exp, std::size_t max_gens) {
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = uniform(rng, 1, max_exp);
    gens.push_back(e);
  }
  std::size_t extra = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_gens - n)));
  for (std::size_t k = 0; k < extra; ++k) {
    IntVec e(n);
    for (auto& x : e) x = uniform(rng, 0, max_exp);
    if (std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; })) e[0] = 1;
    gens.push_back(e);
  }
  return MonomialIdeal(n, gens);
}

MonomialIdeal ideal(Rng& rng, std::size_t n, bool primary, std::int64_t max_exp) {
  if (primary) return primary_ideal(rng, n, max_exp, n + 2);
  std::vector<IntVec> gens;
  std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 3));
  for (std::size_t j = 0; j < k; ++j) {
    IntVec e(n);
    for (auto& x : e) x = uniform(rng, 0, max_exp);
    e[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1))] += 1;
    gens.push_back(e);
  }
  return MonomialIdeal(n, gens);
}

NewtonRegion region(Rng& rng, std::size_t n) {
  std::vector<RatVec> pts;
  std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 4));
  for (std::size_t j = 0; j < k; ++j) {
    RatVec p(n);
    for (auto& x : p) x = Rat(uniform(rng, 0, 6), uniform(rng, 1, 3));
    p[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1))] += 1;
    pts.push_back(std::move(p));
  }
  return NewtonRegion::from_points(std::move(pts));
}

PshGerm germ(Rng& rng, std::size_t n, bool primary) {
  std::vector<PshGerm::Term> terms;
  std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 2));
  for (std::size_t i = 0; i < k; ++i) terms.push_back({positive_rat(rng, 4, 3), ideal(rng, n, primary, 3)});
  return PshGerm(n, terms);
}

Fan fan(Rng& rng, std::size_t n, std::size_t extra_rays) {
  Fan f = Fan::orthant(n);
  for (std::size_t k = 0; k < extra_rays; ++k) {
    IntVec ray(n);
    for (auto& x : ray) x = uniform(rng, 1, 3);
    ray = primitive(ray);
    if (std::find(f.rays().begin(), f.rays().end(), ray) != f.rays().end()) continue;
    f = subdivide_at(f, ray);
  }
  return f;
}

PLFunction pl_function(Rng& rng, const Fan& f) {
  RatVec values;
  for (const auto& ray : f.rays()) {
    bool axis = std::count(ray.begin(), ray.end(), 0) + 1 == static_cast<std::ptrdiff_t>(ray.size());
    Rat size = 0;
    for (auto x : ray) size += x;
    values.push_back(axis ? Rat(0) : -size * Rat(uniform(rng, 1, 4), 4));
  }
  return PLFunction(f, values);
}

ShiftedMonomialValuation shifted_valuation(Rng& rng, std::size_t n) {
  std::vector<Polynomial> shifts(n, Polynomial(n));
  for (std::size_t i = 1; i < n; ++i) {
    auto k = uniform(rng, 0, 2);
    for (std::int64_t t = 0; t < k; ++t) {
      IntVec e(n, 0);
      e[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(i) - 1))] = uniform(rng, 1, 2);
      if (i > 1 && uniform(rng, 0, 1)) e[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(i) - 1))] += 1;
      shifts[i].add_term(e, Rat(uniform(rng, -2, 2)));
    }
  }
  RatVec w(n);
  for (auto& x : w) x = positive_rat(rng, 4, 2);
  return ShiftedMonomialValuation(TriangularChange(shifts), w);
}

Polynomial polynomial(Rng& rng, std::size_t n, std::int64_t max_exp, std::size_t terms) {
  Polynomial p(n);
  while (p.is_zero())
    for (std::size_t k = 0; k < terms; ++k) {
      IntVec e(n);
      for (auto& x : e) x = uniform(rng, 0, max_exp);
      p.add_term(e, Rat(uniform(rng, -3, 3)));
    }
  return p;
}

}  // namespace gen

bool CheckReport::ok() const {
  return std::all_of(instances.begin(), instances.end(), [](const CheckInstance& c) { return c.ok; });
}

namespace {

using gen::Rng;

std::size_t dim_for(const CheckOptions& o, std::size_t i) { return o.dim ? o.dim : 2 + i % 2; }

std::size_t count_or(const CheckOptions& o, std::size_t fallback) { return o.count ? o.count : fallback; }

void fail(CheckInstance& c, std::string witness) {
  c.ok = false;
  c.witnesses.push_back(std::move(witness));
}

std::string label(const std::string& what, const NewtonRegion& p) {
  std::string s = what + " P{";
  for (std::size_t i = 0; i < p.generators().size(); ++i) s += (i ? "," : "") + to_string(p.generators()[i]);
  return s + "}";
}

std::string ideal_label(const MonomialIdeal& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.generators().size(); ++i) s += (i ? "," : "") + to_string(a.generators()[i]);
  return s + ")";
}

std::string germ_label(const PshGerm& u) {
  std::string s;
  for (std::size_t i = 0; i < u.terms().size(); ++i)
    s += (i ? " + " : "") + to_string(u.terms()[i].c) + " log|" + ideal_label(u.terms()[i].ideal) + "|";
  return s;
}

// Approximation sandwich k g <= log|L2(k g)| <= k g + A at random weights.
CheckReport approx_suite(std::uint64_t seed, const CheckOptions& o) {
  CheckReport r{"approx", seed, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < count_or(o, 20); ++i) {
    std::size_t n = dim_for(o, i);
    FormalPshToric g(gen::region(rng, n));
    std::vector<RatVec> ws;
    for (int j = 0; j < 100; ++j) ws.push_back(gen::normalized_weights(rng, n));
    CheckInstance c{label("region", g.region()), true, {}, {}};
    for (unsigned k = 1; k <= 16; ++k)
      for (const auto& s : approx_check(g, k, ws).samples)
        if (!s.ok())
          fail(c, "k=" + std::to_string(k) + " w=" + to_string(s.w) + ": " + to_string(s.lower) + " <= " +
                      to_string(s.value) + " <= " + to_string(s.upper) + " fails");
    r.instances.push_back(std::move(c));
  }
  return r;
}

CheckReport subadditivity_suite(std::uint64_t seed, const CheckOptions& o) {
  CheckReport r{"subadditivity", seed, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < count_or(o, 50); ++i) {
    std::size_t n = dim_for(o, i);
    FormalPshToric g1(gen::region(rng, n)), g2(gen::region(rng, n));
    CheckInstance c{label("pair", g1.region()) + " " + label("and", g2.region()), true, {}, {}};
    for (const auto& m : subadditivity_check(g1, g2).witnesses) fail(c, "x^" + to_string(m) + " not in L2(g1) L2(g2)");
    r.instances.push_back(std::move(c));
  }
  return r;
}

CheckReport els_suite(std::uint64_t seed, const CheckOptions& o) {
  CheckReport r{"els", seed, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < count_or(o, 20); ++i) {
    std::size_t n = dim_for(o, i);
    auto f = gen::fan(rng, n, static_cast<std::size_t>(gen::uniform(rng, 1, 3)));
    auto h = gen::pl_function(rng, f);
    auto g = nef_envelope(h);
    std::vector<RatVec> ws;
    for (int j = 0; j < 20; ++j) ws.push_back(gen::normalized_weights(rng, n));
    CheckInstance c{label("envelope", g.region()), true, {}, {}};
    auto rep = els_approx_check(g, 20, ws);
    c.notes.push_back("C=" + to_string(rep.c) + " stable_from=" + std::to_string(rep.stable_from));
    if (!rep.ok())
      for (auto& w : rep.failures) fail(c, w);
    r.instances.push_back(std::move(c));
  }
  return r;
}

CheckReport izumi_suite(std::uint64_t seed, const CheckOptions& o) {
  CheckReport r{"izumi", seed, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < count_or(o, 50); ++i) {
    std::size_t n = dim_for(o, i);
    auto g = FormalPshToric(gen::region(rng, n)).scaled(gen::positive_rat(rng, 5, 3));
    auto w = gen::normalized_weights(rng, n);
    CheckInstance c{label("region", g.region()) + " w=" + to_string(w), true, {}, {}};
    Rat cst = izumi_constant(w);
    Rat gm = g(RatVec(n, Rat(1))), gw = g(w);
    if (!(cst * gm <= gw && gw <= gm))
      fail(c, to_string(cst) + "*" + to_string(gm) + " <= " + to_string(gw) + " <= " + to_string(gm) + " fails");
    r.instances.push_back(std::move(c));
  }
  return r;
}

CheckReport homotopy_suite(std::uint64_t seed, const CheckOptions& o) {
  CheckReport r{"homotopy", seed, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < count_or(o, 100); ++i) {
    std::size_t n = dim_for(o, i);
    auto nu = gen::shifted_valuation(rng, n);
    nu.max_degree = o.max_degree;
    auto f = gen::polynomial(rng, n), g = gen::polynomial(rng, n);
    CheckInstance c{"w=" + to_string(nu.weights), true, {}, {}};
    Rat s0 = homotopy_eval(nu, f, 0);
    Rat retr = eval_poly(monomial_retraction(nu), f).value();
    if (s0 != retr) fail(c, "h_0(f)=" + to_string(s0) + " but r(nu)(f)=" + to_string(retr));
    Rat thr = homotopy_threshold(nu, f);
    Rat full = eval_poly(nu, f).value();
    for (const Rat& s : {thr, thr + 1})
      if (homotopy_eval(nu, f, s) != full) fail(c, "h_s(f) != nu(f) at s=" + to_string(s));
    auto fg = f * g;
    for (int j = 0; j < 5; ++j) {
      Rat s = Rat(gen::uniform(rng, 0, 12), gen::uniform(rng, 1, 4));
      Rat lhs = homotopy_eval(nu, fg, s), rhs = homotopy_eval(nu, f, s) + homotopy_eval(nu, g, s);
      if (lhs != rhs) fail(c, "h_s(fg)=" + to_string(lhs) + " != " + to_string(rhs) + " at s=" + to_string(s));
    }
    r.instances.push_back(std::move(c));
  }
  return r;
}

CheckReport ma_identity_suite(std::uint64_t seed, const CheckOptions& o) {
  CheckReport r{"ma-identity", seed, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < count_or(o, 20); ++i) {
    std::size_t n = dim_for(o, i);
    std::vector<FormalPshToric> gs;
    std::string name;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      auto a = gen::primary_ideal(rng, n, 4, n + 2);
      gs.push_back(FormalPshToric::log_of(a));
      name += (j ? " " : "") + ideal_label(a);
    }
    CheckInstance c{"MA " + name, true, {}, {}};
    auto ma = monge_ampere_on_fan(gs);
    for (const auto& a : ma.measure.atoms)
      if (a.mass <= 0) fail(c, "nonpositive mass at " + to_string(a.valuation.weights));
    std::vector<FormalPshToric> tests{FormalPshToric::log_of(MonomialIdeal::maximal(n))};
    tests.insert(tests.end(), gs.begin(), gs.end());
    for (int k = 0; k < 3; ++k) tests.push_back(nef_envelope(gen::pl_function(rng, ma.fan)));
    for (const auto& t : tests) {
      auto args = gs;
      args.insert(args.begin(), t);
      Rat lhs = ma.measure.integrate(t), rhs = intersection(args);
      if (lhs != rhs) fail(c, label("test", t.region()) + ": integral " + to_string(lhs) + " != " + to_string(rhs));
    }
    auto args = gs;
    args.insert(args.begin(), FormalPshToric::log_of(MonomialIdeal::maximal(n)));
    if (ma.measure.total_mass() != -intersection(args)) fail(c, "total mass differs from the pairing with P(m)");
    c.notes.push_back("atoms=" + std::to_string(ma.measure.atoms.size()));
    r.instances.push_back(std::move(c));
  }
  return r;
}

// Same transform, different presentation.
PshGerm represent(Rng& rng, const PshGerm& u, std::size_t mode) {
  std::vector<PshGerm::Term> terms;
  const auto& t0 = u.terms()[0];
  if (mode == 0) {
    terms.push_back({t0.c / 2, power(t0.ideal, 2)});
  } else if (mode == 1) {
    // add a monomial of the integral closure that the ideal may miss
    const auto& gs = t0.ideal.generators();
    const auto& p = gs[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<std::int64_t>(gs.size()) - 1))];
    const auto& q = gs[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<std::int64_t>(gs.size()) - 1))];
    IntVec mid(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) mid[i] = (p[i] + q[i] + 1) / 2;
    terms.push_back({t0.c, ideal_sum(t0.ideal, MonomialIdeal(p.size(), {mid}))});
  } else {
    terms.push_back({t0.c / 3, t0.ideal});
    terms.push_back({t0.c * 2 / 3, t0.ideal});
  }
  for (std::size_t i = 1; i < u.terms().size(); ++i) terms.push_back(u.terms()[i]);
  return PshGerm(u.dim(), terms);
}

CheckReport theoremA_suite(std::uint64_t seed, const CheckOptions& o) {
  CheckReport r{"theoremA", seed, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < 50; ++i) {
    std::size_t n = dim_for(o, i);
    auto u = gen::germ(rng, n, i % 3 != 0);
    auto w = gen::normalized_weights(rng, n);
    CheckInstance c{"relative type of " + germ_label(u) + " at " + to_string(w), true, {}, {}};
    Rat a = relative_type(u, w), b = relative_type_by_domination(u, w), t = -transform(u)(w);
    if (a != t || b != t) fail(c, to_string(a) + ", " + to_string(b) + ", " + to_string(t) + " differ");
    r.instances.push_back(std::move(c));
  }
  const std::size_t n = o.dim ? o.dim : 2;
  std::vector<PshGerm> phis{PshGerm::log_of(MonomialIdeal::maximal(n))};
  for (int j = 0; j < 2; ++j) phis.push_back(PshGerm::log_of(gen::primary_ideal(rng, n, 3, n + 1)));
  for (std::size_t i = 0; i < count_or(o, 20); ++i) {
    auto u = gen::germ(rng, n, i % 2 == 0);
    bool same = i % 4 != 3;
    auto v = same ? represent(rng, u, i % 4) : gen::germ(rng, n, i % 2 == 0);
    std::vector<RatVec> ws;
    for (int j = 0; j < 5; ++j) ws.push_back(gen::normalized_weights(rng, n));
    CheckInstance c{germ_label(u) + " vs " + germ_label(v), true, {}, {}};
    auto rep = theoremA_check(u, v, ws, phis);
    c.notes.push_back(std::string("(1)=") + (rep.regions_equal ? "1" : "0") + " (2)=" +
                      (rep.multipliers_equal ? "1" : "0") + " (3)=" + (rep.types_equal ? "1" : "0") +
                      " (4)=" + (rep.lelong_equal ? "1" : "0") + " cap=" + to_string(rep.cap));
    for (const auto& note : rep.notes) c.notes.push_back(note);
    if (!rep.consistent()) fail(c, "verdicts violate (1) <=> (2) <=> (3) => (4)");
    if (same && !rep.regions_equal) fail(c, "re-presented germ has a different transform");
    r.instances.push_back(std::move(c));
  }
  return r;
}

using Suite = std::function<CheckReport(std::uint64_t, const CheckOptions&)>;

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> suites{
      {"approx", approx_suite},     {"subadditivity", subadditivity_suite}, {"els", els_suite},
      {"izumi", izumi_suite},       {"homotopy", homotopy_suite},           {"ma-identity", ma_identity_suite},
      {"theoremA", theoremA_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> names{"approx", "subadditivity", "els",     "izumi",
                                              "homotopy", "ma-identity",   "theoremA"};
  return names;
}

CheckReport run_check(const std::string& suite, std::uint64_t seed, const CheckOptions& options) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw Error("unknown check suite '" + suite + "'");
  return it->second(seed, options);
}

}  // namespace valuix
