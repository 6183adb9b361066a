#pragma once

// Brute-force lattice oracle for Newton regions, independent of the facet
// description: membership of x in conv(V) + orthant is decided by the LP
//   maximize eps  s.t.  x - eps*1 = sum lambda_j v_j + sum mu_i e_i,
//                       sum lambda_j = 1, lambda, mu >= 0,
// solved by enumerating basic solutions. x is in P iff the LP is feasible,
// and (for x > 0) in the interior iff the optimum is positive.

#include <optional>

#include "valuix/divisors.hpp"
#include "valuix/linalg.hpp"
#include "valuix/polyhedra.hpp"

namespace oracle {

using namespace valuix;

inline std::optional<Rat> max_retreat(const std::vector<RatVec>& vertices, const RatVec& x) {
  const std::size_t n = x.size();
  // Columns: vertices (with a 1 in the last row), unit vectors, and the eps column.
  std::vector<RatVec> cols;
  for (const auto& v : vertices) {
    RatVec c = v;
    c.push_back(1);
    cols.push_back(c);
  }
  for (std::size_t i = 0; i < n; ++i) {
    RatVec c(n + 1, Rat(0));
    c[i] = 1;
    cols.push_back(c);
  }
  RatVec eps(n + 1, Rat(1));
  eps[n] = 0;
  cols.push_back(eps);
  RatVec rhs = x;
  rhs.push_back(1);
  std::optional<Rat> best;
  poly::for_each_subset(cols.size(), n + 1, [&](const poly::IndexSet& basis) {
    Matrix a(n + 1, RatVec(n + 1));
    for (std::size_t j = 0; j < n + 1; ++j)
      for (std::size_t r = 0; r < n + 1; ++r) a[r][j] = cols[basis[j]][r];
    auto sol = linalg::solve(a, rhs);
    if (!sol) return true;
    Rat e = 0;
    for (std::size_t j = 0; j < n + 1; ++j) {
      if (basis[j] + 1 == cols.size()) {
        e = (*sol)[j];
        continue;
      }
      if ((*sol)[j] < 0) return true;
    }
    if (e < 0) return true;
    if (!best || e > *best) best = e;
    return true;
  });
  return best;
}

inline bool member(const std::vector<RatVec>& vertices, const RatVec& x) {
  return max_retreat(vertices, x).has_value();
}

inline bool interior_member(const std::vector<RatVec>& vertices, const RatVec& x) {
  auto e = max_retreat(vertices, x);
  return e && *e > 0;
}

// Minimal exponents m in the box [0, bound]^n with pred(m).
template <class Pred>
std::vector<IntVec> minimal_in_box(std::size_t n, long bound, Pred pred) {
  std::vector<IntVec> hits;
  IntVec m(n, 0);
  while (true) {
    if (pred(m)) hits.push_back(m);
    std::size_t i = 0;
    while (i < n && ++m[i] > bound) m[i++] = 0;
    if (i == n) break;
  }
  if (hits.empty()) throw Error("oracle: empty box scan");
  return MonomialIdeal(n, hits).generators();
}

inline std::vector<IntVec> l2_generators(const NewtonRegion& p, long bound) {
  const auto& vs = p.generators();
  return minimal_in_box(p.dim(), bound, [&](const IntVec& m) {
    RatVec x;
    for (auto e : m) x.emplace_back(e + 1);
    return interior_member(vs, x);
  });
}

inline std::vector<IntVec> linf_generators(const NewtonRegion& p, long bound) {
  const auto& vs = p.generators();
  return minimal_in_box(p.dim(), bound, [&](const IntVec& m) { return member(vs, to_rat(m)); });
}

}  // namespace oracle
