#include "valuix/intersection.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "valuix/linalg.hpp"
#include "valuix/multiplier.hpp"

namespace valuix {

namespace {

Rat factorial(std::size_t n) {
  Rat f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= Rat(static_cast<long>(i));
  return f;
}

void require_primary(const NewtonRegion& p, const char* where) {
  if (!p.has_bounded_complement())
    throw Error(std::string(where) + ": input is not primary (unbounded complement)");
}

// Exponent vectors t >= 0 with |t| = d.
std::vector<IntVec> compositions(std::size_t n, std::int64_t d) {
  std::vector<IntVec> out;
  IntVec t(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i + 1 == n) {
      t[i] = left;
      out.push_back(t);
      return;
    }
    for (std::int64_t k = left; k >= 0; --k) {
      t[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return out;
}

NewtonRegion combination(const std::vector<NewtonRegion>& regions, const IntVec& t) {
  NewtonRegion s = NewtonRegion::whole_orthant(regions[0].dim());
  for (std::size_t i = 0; i < regions.size(); ++i)
    if (t[i] > 0) s = minkowski_sum(s, scale(regions[i], Rat(t[i])));
  return s;
}

void check_tuple(const std::vector<NewtonRegion>& regions, const char* where) {
  if (regions.empty()) throw Error(std::string(where) + ": no regions");
  const std::size_t n = regions[0].dim();
  if (regions.size() != n) throw Error(std::string(where) + ": need exactly n regions");
  for (const auto& p : regions) {
    if (p.dim() != n) throw Error(std::string(where) + ": dimension mismatch");
    require_primary(p, where);
  }
}

std::vector<NewtonRegion> regions_of(const std::vector<FormalPshToric>& gs) {
  std::vector<NewtonRegion> out;
  for (const auto& g : gs) out.push_back(g.region());
  return out;
}

}  // namespace

Rat multiplicity(const NewtonRegion& p) {
  require_primary(p, "multiplicity");
  return factorial(p.dim()) * p.covolume();
}

Rat mixed_multiplicity(const std::vector<NewtonRegion>& regions) {
  check_tuple(regions, "mixed_multiplicity");
  const std::size_t n = regions.size();
  auto points = compositions(n, static_cast<std::int64_t>(n));
  const auto& monomials = points;  // degree-n monomials in t use the same index set
  Matrix a;
  RatVec values;
  for (const auto& t : points) {
    RatVec row;
    for (const auto& beta : monomials) {
      Rat x = 1;
      for (std::size_t i = 0; i < n; ++i)
        for (std::int64_t k = 0; k < beta[i]; ++k) x *= Rat(t[i]);
      row.push_back(x);
    }
    a.push_back(std::move(row));
    values.push_back(multiplicity(combination(regions, t)));
  }
  auto coef = linalg::solve(a, values);
  if (!coef) throw Error("mixed_multiplicity: interpolation system is singular");
  IntVec ones(n, 1);
  auto it = std::find(monomials.begin(), monomials.end(), ones);
  return (*coef)[static_cast<std::size_t>(it - monomials.begin())] / factorial(n);
}

Rat mixed_multiplicity_polarized(const std::vector<NewtonRegion>& regions) {
  check_tuple(regions, "mixed_multiplicity");
  const std::size_t n = regions.size();
  Rat total = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    IntVec t(n, 0);
    std::size_t size = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        t[i] = 1;
        ++size;
      }
    Rat m = multiplicity(combination(regions, t));
    total += (n - size) % 2 ? -m : m;
  }
  return total / factorial(n);
}

Rat intersection(const std::vector<FormalPshToric>& gs) { return -mixed_multiplicity(regions_of(gs)); }

Rat intersection(const std::vector<PLFunction>& hs) {
  std::vector<NewtonRegion> regions;
  for (const auto& h : hs) {
    if (!is_nef(h)) throw Error("intersection: PL function is not nef");
    auto g = nef_envelope(h);
    if (!(pl_from_region(g.region(), h.fan()).values() == h.values()))
      throw Error("intersection: PL function is not the incarnation of its envelope");
    regions.push_back(g.region());
  }
  return -mixed_multiplicity(regions);
}

Rat AtomicMeasure::total_mass() const {
  Rat s = 0;
  for (const auto& a : atoms) s += a.mass;
  return s;
}

Rat AtomicMeasure::integrate(const FormalPshToric& g) const {
  Rat s = 0;
  for (const auto& a : atoms) s += a.mass * g(a.valuation.weights);
  return s;
}

FormalPshToric extremal_weight_region(const RatVec& w) {
  MonomialValuation nu(w);
  if (!nu.is_normalized()) throw Error("extremal_weight_region: weights must be normalized");
  std::vector<RatVec> pts;
  for (std::size_t i = 0; i < w.size(); ++i) {
    RatVec e(w.size(), Rat(0));
    e[i] = 1 / w[i];
    pts.push_back(std::move(e));
  }
  return FormalPshToric(NewtonRegion::from_points(std::move(pts)));
}

namespace {

RatVec normalized_ray(const IntVec& ray) { return scaled(to_rat(ray), Rat(1, b_value(ray))); }

// Extra test weights, used only when the basic family is rank deficient.
std::vector<RatVec> extra_weights(const std::vector<RatVec>& atoms, std::size_t round) {
  std::vector<RatVec> out;
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    RatVec w = atoms[j];
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += Rat(static_cast<long>((i + j + round) % 3), round + 1);
    out.push_back(normalize(MonomialValuation(w)).valuation.weights);
  }
  return out;
}

}  // namespace

MongeAmpere monge_ampere_on_fan(const std::vector<FormalPshToric>& gs) {
  if (gs.empty()) throw Error("monge_ampere: no inputs");
  const std::size_t n = gs[0].dim();
  if (n < 2 || gs.size() + 1 != n) throw Error("monge_ampere: need n-1 functions in dimension n >= 2");
  auto regions = regions_of(gs);
  for (const auto& p : regions) {
    if (p.dim() != n) throw Error("monge_ampere: dimension mismatch");
    require_primary(p, "monge_ampere");
  }
  MongeAmpere out{AtomicMeasure{}, normal_fan_refinement(regions)};
  std::vector<RatVec> points;
  for (auto r : out.fan.interior_rays()) points.push_back(normalized_ray(out.fan.rays()[r]));
  if (points.empty()) return out;

  // Defining identity: sum_j mass_j g(nu_j) = <Z(g), Z(g_1), ..., Z(g_{n-1})>.
  std::vector<NewtonRegion> tests{region_of(MonomialIdeal::maximal(n))};
  for (const auto& w : points) tests.push_back(extremal_weight_region(w).region());
  Matrix rows;
  RatVec rhs;
  auto add_test = [&](const NewtonRegion& t) {
    RatVec row;
    for (const auto& w : points) row.push_back(-t.support_value(w));
    std::vector<NewtonRegion> tuple{t};
    tuple.insert(tuple.end(), regions.begin(), regions.end());
    rows.push_back(std::move(row));
    rhs.push_back(-mixed_multiplicity(tuple));
  };
  for (const auto& t : tests) add_test(t);
  for (std::size_t round = 0; linalg::rank(rows) < points.size(); ++round) {
    if (round == 3) throw Error("monge_ampere: test functions do not determine the masses");
    for (const auto& w : extra_weights(points, round)) add_test(extremal_weight_region(w).region());
  }

  // Square subsystem of independent rows, then every row must agree.
  Matrix square;
  RatVec square_rhs;
  for (std::size_t i = 0; i < rows.size() && square.size() < points.size(); ++i) {
    square.push_back(rows[i]);
    if (linalg::rank(square) < square.size()) square.pop_back();
    else square_rhs.push_back(rhs[i]);
  }
  auto mass = linalg::solve(square, square_rhs);
  if (!mass) throw Error("monge_ampere: singular mass system");
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (dot(rows[i], *mass) != rhs[i]) throw Error("monge_ampere: inconsistent defining identity");
  for (std::size_t j = 0; j < points.size(); ++j) {
    if ((*mass)[j] < 0) throw Error("monge_ampere: negative mass at " + to_string(points[j]));
    if ((*mass)[j] > 0) out.measure.atoms.push_back({MonomialValuation(points[j]), (*mass)[j]});
  }
  return out;
}

AtomicMeasure monge_ampere(const std::vector<FormalPshToric>& gs) { return monge_ampere_on_fan(gs).measure; }

namespace {

AtomicMeasure lelong_measure(const PshGerm& phi) {
  auto g = transform(phi);
  if (!g.region().has_bounded_complement()) throw Error("generalized_lelong: weight is not primary");
  return monge_ampere(std::vector<FormalPshToric>(phi.dim() - 1, g));
}

}  // namespace

Rat generalized_lelong(const PshGerm& u, const PshGerm& phi) {
  if (u.dim() != phi.dim()) throw Error("generalized_lelong: dimension mismatch");
  return -lelong_measure(phi).integrate(transform(u));
}

Rat relative_type(const PshGerm& u, const RatVec& w) {
  if (w.size() != u.dim()) throw Error("relative_type: dimension mismatch");
  if (!MonomialValuation(w).is_normalized()) throw Error("relative_type: weights must be normalized");
  return kiselman(u, w);
}

Rat relative_type_by_domination(const PshGerm& u, const RatVec& w) {
  if (w.size() != u.dim()) throw Error("relative_type: dimension mismatch");
  auto e = extremal_weight_region(w).region();
  auto g = transform(u);
  const auto& gens = g.region().generators();
  Rat c = e.order_of(gens[0]).value();
  for (const auto& v : gens) c = std::min(c, e.order_of(v).value());
  return c;
}

bool TheoremAReport::consistent() const {
  return regions_equal == multipliers_equal && multipliers_equal == types_equal &&
         (!regions_equal || lelong_equal);
}

namespace {

// Union of the candidate jump points of c -> L2(c g) in (0, cap].
void jump_candidates(const FormalPshToric& g, const Rat& cap, std::set<Rat>& out) {
  for (const auto& f : g.region().facets()) {
    Rat s = 0;
    for (const auto& a : f.normal) s += a;
    for (; s / f.offset <= cap; s += 1) out.insert(s / f.offset);
  }
}

}  // namespace

TheoremAReport theoremA_check(const PshGerm& u, const PshGerm& v, const std::vector<RatVec>& weights,
                              const std::vector<PshGerm>& phis) {
  if (u.dim() != v.dim()) throw Error("theoremA_check: dimension mismatch");
  const std::size_t n = u.dim();
  TheoremAReport r;
  auto gu = transform(u), gv = transform(v);
  r.regions_equal = gu == gv;

  // (3) at the given weights and at the positive facet normals of both.
  std::vector<RatVec> samples = weights;
  for (const auto* g : {&gu, &gv})
    for (const auto& f : g->region().facets())
      if (all_positive(f.normal)) samples.push_back(normalize(MonomialValuation(f.normal)).valuation.weights);
  r.types_equal = true;
  for (const auto& w : samples)
    if (relative_type(u, w) != relative_type(v, w)) {
      r.types_equal = false;
      r.notes.push_back("relative types differ at " + to_string(w));
      break;
    }

  // (2) on (0, cap]; the cap grows while the ideals agree and the regions differ.
  Rat cap = 1;
  for (const auto* g : {&gu, &gv}) {
    auto l = lct(*g);
    if (!l.is_infinite()) cap = std::max(cap, Rat(static_cast<long>(n)) * l.value());
  }
  r.multipliers_equal = true;
  for (int round = 0; round < 6; ++round) {
    std::set<Rat> cs{cap};
    jump_candidates(gu, cap, cs);
    jump_candidates(gv, cap, cs);
    for (const auto& c : cs)
      if (!(l2_ideal(gu.scaled(c)) == l2_ideal(gv.scaled(c)))) {
        r.multipliers_equal = false;
        r.notes.push_back("multiplier ideals differ at c=" + to_string(c));
        break;
      }
    r.cap = cap;
    if (!r.multipliers_equal || r.regions_equal) break;
    cap *= 2;
  }
  if (r.multipliers_equal && !r.regions_equal)
    r.notes.push_back("multiplier ideals agree up to c=" + to_string(r.cap));

  // (4) against each weight phi.
  r.lelong_equal = true;
  for (const auto& phi : phis) {
    auto mu = lelong_measure(phi);
    if (mu.integrate(gu) != mu.integrate(gv)) {
      r.lelong_equal = false;
      r.notes.push_back("generalized Lelong numbers differ");
      break;
    }
  }
  if (r.converse_witness()) r.notes.push_back("(4) holds although (1) fails");
  return r;
}

}  // namespace valuix
