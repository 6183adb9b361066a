#include "valuix/multiplier.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace valuix {

std::vector<IntVec> staircase(std::size_t n, const IntVec& box,
                              const std::function<Extended(const IntVec& head)>& least_last) {
  // f(head) = least last coordinate over the head box, stored in mixed radix.
  const std::size_t h = n - 1;
  std::vector<std::size_t> stride(h + 1, 1);
  for (std::size_t i = 0; i < h; ++i) stride[i + 1] = stride[i] * static_cast<std::size_t>(box[i] + 1);
  std::vector<Extended> f(stride[h]);
  IntVec head(h, 0);
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    f[idx] = least_last(head);
    std::size_t i = 0;
    while (i < h && ++head[i] > box[i]) head[i++] = 0;
  }
  std::vector<IntVec> gens;
  head.assign(h, 0);
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    if (!f[idx].is_infinite()) {
      bool minimal = true;
      for (std::size_t i = 0; i < h && minimal; ++i)
        if (head[i] > 0) minimal = f[idx - stride[i]] > f[idx];
      if (minimal) {
        IntVec g = head;
        g.push_back(to_int64(numerator(f[idx].value())));
        gens.push_back(std::move(g));
      }
    }
    std::size_t i = 0;
    while (i < h && ++head[i] > box[i]) head[i++] = 0;
  }
  return gens;
}

IntVec generator_box(const NewtonRegion& p) {
  IntVec box(p.dim(), 0);
  if (p.is_trivial()) return box;
  for (const auto& v : p.generators())
    for (std::size_t i = 0; i < p.dim(); ++i) box[i] = std::max(box[i], to_int64(ceil_int(v[i])) + 1);
  return box;
}

namespace {

// Least integer t >= 0 with (head, t) + shift*1 on the required side of
// every facet; strict selects the L2 (open) condition.
MonomialIdeal scan(const NewtonRegion& p, bool strict) {
  const std::size_t n = p.dim();
  const Rat shift = strict ? 1 : 0;
  auto least_last = [&](const IntVec& head) -> Extended {
    Int t = 0;
    for (const auto& f : p.facets()) {
      Rat s = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) s += f.normal[i] * (Rat(head[i]) + shift);
      const Rat& last = f.normal[n - 1];
      if (last.is_zero()) {
        if (strict ? s <= f.offset : s < f.offset) return Extended::infinity();
        continue;
      }
      Rat q = (f.offset - s) / last;
      // strict: t + 1 > q, i.e. t >= floor(q); otherwise t >= ceil(q)
      t = std::max(t, strict ? floor_int(q) : ceil_int(q));
    }
    return Rat(t);
  };
  return MonomialIdeal(n, staircase(n, generator_box(p), least_last));
}

Rat weight_sum(const RatVec& w) { return std::accumulate(w.begin(), w.end(), Rat(0)); }

}  // namespace

MonomialIdeal l2_ideal(const FormalPshToric& g) { return scan(g.region(), true); }

MonomialIdeal linf_ideal(const FormalPshToric& g) { return scan(g.region(), false); }

Extended lct(const FormalPshToric& g) {
  const auto& facets = g.region().facets();
  if (facets.empty()) return Extended::infinity();
  Rat best = weight_sum(facets[0].normal) / facets[0].offset;
  for (const auto& f : facets) best = std::min(best, weight_sum(f.normal) / f.offset);
  return best;
}

JumpingLadder jumping_ladder(const FormalPshToric& g, const Rat& c_max_in) {
  JumpingLadder ladder;
  Extended l = lct(g);
  if (l.is_infinite()) return ladder;
  Rat c_max = c_max_in;
  if (c_max.is_zero()) c_max = Rat(static_cast<long>(g.dim())) * l.value();
  if (c_max < 0) throw Error("jumping_ladder: c_max must be positive");
  // Membership of x^m in L2(c g) flips only at c = <a, m + 1>/b, and
  // <a, m + 1> runs over integers >= <a, 1>.
  std::set<Rat> candidates;
  for (const auto& f : g.region().facets()) {
    Int s = numerator(weight_sum(f.normal));
    for (; Rat(s) / f.offset <= c_max; ++s) candidates.insert(Rat(s) / f.offset);
  }
  MonomialIdeal prev = MonomialIdeal::unit(g.dim());
  for (const auto& c : candidates) {
    auto ideal = l2_ideal(g.scaled(c));
    if (ideal == prev) continue;
    ladder.thresholds.push_back(c);
    ladder.ideals.push_back(ideal);
    prev = std::move(ideal);
  }
  return ladder;
}

FormalPshToric nef_envelope(const PLFunction& h) {
  std::vector<Halfspace> hs;
  const auto& rays = h.fan().rays();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (h.values()[i] > 0) throw Error("nef_envelope: positive value on ray " + to_string(rays[i]));
    hs.push_back({to_rat(rays[i]), -h.values()[i]});
  }
  return FormalPshToric(NewtonRegion::from_halfspaces(h.fan().dim(), hs));
}

bool ApproxReport::ok() const {
  return std::all_of(samples.begin(), samples.end(), [](const ApproxSample& s) { return s.ok(); });
}

ApproxReport approx_check(const FormalPshToric& g, unsigned k, const std::vector<RatVec>& weights) {
  if (k == 0) throw Error("approx_check: k must be >= 1");
  auto kg = g.scaled(Rat(k));
  auto ideal = l2_ideal(kg);
  ApproxReport report;
  for (const auto& w : weights) {
    if (w.size() != g.dim()) throw Error("approx_check: dimension mismatch");
    Rat kgw = kg(w);
    Rat nu = dot(w, ideal.generators()[0]);
    for (const auto& m : ideal.generators()) nu = std::min(nu, dot(w, m));
    report.samples.push_back({w, kgw, -nu, kgw + weight_sum(w)});
  }
  return report;
}

SubadditivityReport subadditivity_check(const FormalPshToric& g1, const FormalPshToric& g2) {
  if (g1.dim() != g2.dim()) throw Error("subadditivity_check: dimension mismatch");
  auto lhs = l2_ideal(divisor_sum(g1, g2));
  auto rhs = product(l2_ideal(g1), l2_ideal(g2));
  SubadditivityReport report;
  for (const auto& m : lhs.generators())
    if (!rhs.contains(m)) {
      report.ok = false;
      report.witnesses.push_back(m);
    }
  return report;
}

Rat tameness_bound(const FormalPshToric& g) {
  if (g.is_zero()) throw Error("tameness: the zero function has no tameness constant");
  Rat best = 0;
  for (const auto& f : g.region().facets()) best = std::max(best, weight_sum(f.normal) / f.offset);
  return best;
}

namespace {

// Least C >= 0 with every generator of L2(k g) in Linf((k - C) g).
Rat tameness_at(const FormalPshToric& g, unsigned k) {
  Rat c = 0;
  auto ideal = l2_ideal(g.scaled(Rat(k)));
  for (const auto& m : ideal.generators())
    c = std::max(c, Rat(k) - g.region().order_of(to_rat(m)).value());
  return c;
}

}  // namespace

Tameness tameness_constant(const FormalPshToric& g, unsigned k_min, unsigned k_max) {
  Tameness t{tameness_bound(g), Rat(0)};
  if (k_min == 0 || k_min > k_max) throw Error("tameness: need 1 <= k_min <= k_max");
  for (unsigned k = k_min; k <= k_max; ++k) t.empirical = std::max(t.empirical, tameness_at(g, k));
  return t;
}

FormalPshToric linf_approximant(const FormalPshToric& g, unsigned k) {
  if (k == 0) throw Error("linf_approximant: k must be >= 1");
  return FormalPshToric(region_of(linf_ideal(g.scaled(Rat(k))))).scaled(Rat(1, k));
}

ElsReport els_approx_check(const FormalPshToric& g, unsigned k_max, const std::vector<RatVec>& weights) {
  ElsReport r;
  r.c = tameness_bound(g);
  if (Rat(k_max) <= r.c) throw Error("els_approx_check: k must exceed the tameness constant " + to_string(r.c));
  r.k_first = to_int64(floor_int(r.c)) + 1;
  r.k_max = k_max;
  auto min_over = [](const MonomialIdeal& a, const RatVec& w) {
    Rat best = dot(w, a.generators()[0]);
    for (const auto& m : a.generators()) best = std::min(best, dot(w, m));
    return best;
  };
  std::vector<FormalPshToric> approximants;
  for (unsigned k = 1; k <= k_max; ++k) approximants.push_back(linf_approximant(g, k));
  for (unsigned k = r.k_first; k <= k_max; ++k) {
    Rat kc = Rat(k) - r.c;
    auto ideal = l2_ideal(g.scaled(Rat(k)));
    for (const auto& m : ideal.generators())
      if (g.region().order_of(to_rat(m)).value() < kc) {
        r.containment = false;
        r.failures.push_back("k=" + std::to_string(k) + ": " + to_string(m) + " not in Linf((k-C)g)");
      }
    const auto& wk = approximants[k - 1];
    auto upper = linf_ideal(g.scaled(kc));
    for (const auto& w : weights) {
      Rat gw = g(w);
      Rat hi = -min_over(upper, w) / Rat(k);
      if (!(wk(w) <= gw && gw <= hi)) {
        r.sandwich = false;
        r.failures.push_back("k=" + std::to_string(k) + ": sandwich fails at " + to_string(w));
      }
    }
  }
  auto target = l2_ideal(g);
  for (unsigned k = k_max; k >= 1; --k) {
    if (!(l2_ideal(approximants[k - 1]) == target)) break;
    r.stable_from = k;
  }
  if (r.stable_from == 0) r.failures.push_back("L2(W_k) differs from L2(W) at k=" + std::to_string(k_max));
  return r;
}

FormalPshToric dyadic_approximant(const FormalPshToric& g, unsigned k) {
  Rat two_k = 1, four_k = 1;
  for (unsigned i = 0; i < k; ++i) {
    two_k *= 2;
    four_k *= 4;
  }
  auto ideal_region = region_of(l2_ideal(g.scaled(two_k)));
  auto cap = scale(region_of(MonomialIdeal::maximal(g.dim())), four_k);
  return FormalPshToric(scale(union_hull(ideal_region, cap), 1 / two_k));
}

}  // namespace valuix
