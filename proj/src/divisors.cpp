#include "valuix/divisors.hpp"

#include <algorithm>

namespace valuix {

namespace {

bool divides(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<IntVec> minimize(std::vector<IntVec> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && divides(gens[j], gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<IntVec> generators) : dim_(n) {
  if (n == 0) throw Error("monomial ideal: dimension must be positive");
  if (generators.empty()) throw Error("monomial ideal: no generators (zero ideal)");
  for (const auto& g : generators) {
    if (g.size() != n) throw Error("monomial ideal: dimension mismatch");
    for (auto e : g)
      if (e < 0) throw Error("monomial ideal: negative exponent");
  }
  generators_ = minimize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) { return MonomialIdeal(n, {IntVec(n, 0)}); }

MonomialIdeal MonomialIdeal::maximal(std::size_t n) {
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  return MonomialIdeal(n, gens);
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 &&
         std::all_of(generators_[0].begin(), generators_[0].end(), [](auto e) { return e == 0; });
}

bool MonomialIdeal::is_primary() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    bool found = false;
    for (const auto& g : generators_) {
      bool pure = true;
      for (std::size_t j = 0; j < dim_ && pure; ++j) pure = j == i || g[j] == 0;
      found = found || pure;
    }
    if (!found) return false;
  }
  return true;
}

bool MonomialIdeal::contains(const IntVec& monomial) const {
  if (monomial.size() != dim_) throw Error("monomial ideal: dimension mismatch");
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const IntVec& g) { return divides(g, monomial); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const IntVec& g) { return contains(g); });
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw Error("ideal product: dimension mismatch");
  std::vector<IntVec> gens;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) {
      IntVec s(x);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += y[i];
      gens.push_back(std::move(s));
    }
  return MonomialIdeal(a.dim(), std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw Error("ideal sum: dimension mismatch");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.dim(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, unsigned k) {
  MonomialIdeal out = MonomialIdeal::unit(a.dim());
  for (unsigned i = 0; i < k; ++i) out = product(out, a);
  return out;
}

NewtonRegion region_of(const MonomialIdeal& a) {
  std::vector<RatVec> pts;
  for (const auto& g : a.generators()) pts.push_back(to_rat(g));
  return region_from_points(pts);
}

FormalPshToric divisor_max(const FormalPshToric& g1, const FormalPshToric& g2) {
  return FormalPshToric(union_hull(g1.region(), g2.region()));
}

FormalPshToric divisor_sum(const FormalPshToric& g1, const FormalPshToric& g2) {
  return FormalPshToric(minkowski_sum(g1.region(), g2.region()));
}

PshGerm::PshGerm(std::size_t n, std::vector<Term> terms) : dim_(n), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.c <= 0) throw Error("psh germ: coefficients must be positive");
    if (t.ideal.dim() != n) throw Error("psh germ: dimension mismatch");
  }
}

PshGerm operator+(const PshGerm& u, const PshGerm& v) {
  if (u.dim() != v.dim()) throw Error("psh germ sum: dimension mismatch");
  auto terms = u.terms();
  terms.insert(terms.end(), v.terms().begin(), v.terms().end());
  return PshGerm(u.dim(), std::move(terms));
}

FormalPshToric transform(const PshGerm& u) {
  NewtonRegion region = NewtonRegion::whole_orthant(u.dim());
  for (const auto& t : u.terms()) region = minkowski_sum(region, scale(region_of(t.ideal), t.c));
  return FormalPshToric(std::move(region));
}

Rat lelong_number(const PshGerm& u) {
  return -transform(u)(RatVec(u.dim(), Rat(1)));
}

}  // namespace valuix
