#pragma once

// Valuative multiplier ideals of toric formal psh functions and the checks
// around them: approximation sandwich, subadditivity, tameness.
//
// For a region P with facets <a, m> >= b (b > 0), a monomial x^m lies in
// L2(g_P) iff m + 1 is strictly inside every such facet, and in Linf(g_P)
// iff m itself lies in P.

#include <functional>
#include <string>
#include <vector>

#include "valuix/divisors.hpp"
#include "valuix/toric.hpp"

namespace valuix {

MonomialIdeal l2_ideal(const FormalPshToric& g);
MonomialIdeal linf_ideal(const FormalPshToric& g);
/// Componentwise bound on generator exponents used by both scans.
IntVec generator_box(const NewtonRegion& p);

/// min over facets of <a, 1>/b; +infinity for the zero function.
Extended lct(const FormalPshToric& g);

struct JumpingLadder {
  std::vector<Rat> thresholds;        // increasing; the first is the lct
  std::vector<MonomialIdeal> ideals;  // L2(c g) for c in [thresholds[j], thresholds[j+1])
};
/// Jumps of c -> L2(c g) in (0, c_max]. A zero c_max means n * lct.
JumpingLadder jumping_ladder(const FormalPshToric& g, const Rat& c_max = 0);

/// Largest toric formal psh function below h on the rays of its fan.
FormalPshToric nef_envelope(const PLFunction& h);

struct ApproxSample {
  RatVec w;
  Rat lower, value, upper;  // k g(w) <= -nu_w(L2(k g)) <= k g(w) + A(w)
  bool ok() const { return lower <= value && value <= upper; }
};
struct ApproxReport {
  std::vector<ApproxSample> samples;
  bool ok() const;
};
ApproxReport approx_check(const FormalPshToric& g, unsigned k, const std::vector<RatVec>& weights);

struct SubadditivityReport {
  bool ok = true;
  std::vector<IntVec> witnesses;  // generators of L2(g1 + g2) outside L2(g1) L2(g2)
};
SubadditivityReport subadditivity_check(const FormalPshToric& g1, const FormalPshToric& g2);

/// max over facets of A(nu_a) / (-g(nu_a)) = <a, 1>/b.
Rat tameness_bound(const FormalPshToric& g);
struct Tameness {
  Rat bound;      // a priori constant C0
  Rat empirical;  // least C with L2(k g) in Linf((k - C) g) for every tested k
};
Tameness tameness_constant(const FormalPshToric& g, unsigned k_min, unsigned k_max);

struct ElsReport {
  Rat c;                   // tameness constant used
  unsigned k_first = 0;    // first k > c checked
  unsigned k_max = 0;
  bool containment = true;  // L2(k g) in Linf((k - c) g)
  bool sandwich = true;     // g_k <= g <= -nu(Linf((k - c) g)) / k at sample weights
  unsigned stable_from = 0; // least k0 with L2(g) = L2(W_k) for all k0 <= k <= k_max; 0 if none
  std::vector<std::string> failures;
  bool ok() const { return containment && sandwich && stable_from != 0; }
};
/// Checks for k = floor(C0) + 1, ..., k_max at the given weights.
ElsReport els_approx_check(const FormalPshToric& g, unsigned k_max, const std::vector<RatVec>& weights);

/// W_k = (1/k) * region of Linf(k g).
FormalPshToric linf_approximant(const FormalPshToric& g, unsigned k);

/// (1/2^k) log |L2(2^k g) + m^(4^k)|, decreasing in k with limit g.
FormalPshToric dyadic_approximant(const FormalPshToric& g, unsigned k);

/// Minimal elements of the up-set {m : member(m)} of exponents, assuming
/// membership does not change past `box` in any coordinate.
std::vector<IntVec> staircase(std::size_t n, const IntVec& box,
                              const std::function<Extended(const IntVec& head)>& least_last);

}  // namespace valuix
