#pragma once

// Intersection numbers of nef divisors Z(g) for primary-backed toric formal
// psh functions, Monge-Ampere measures, generalized Lelong numbers and
// relative types.

#include <string>
#include <vector>

#include "valuix/divisors.hpp"
#include "valuix/toric.hpp"
#include "valuix/valuation.hpp"

namespace valuix {

/// n! * covolume(P); P must have a bounded complement.
Rat multiplicity(const NewtonRegion& p);

/// e<P_1, ..., P_n>, the multilinear part of t -> multiplicity(sum t_i P_i)
/// recovered by interpolation on {t >= 0 : |t| = n}.
Rat mixed_multiplicity(const std::vector<NewtonRegion>& regions);
/// The same number by inclusion-exclusion over sub-sums.
Rat mixed_multiplicity_polarized(const std::vector<NewtonRegion>& regions);

/// <Z(g_1), ..., Z(g_n)> = -e<P_1, ..., P_n>.
Rat intersection(const std::vector<FormalPshToric>& gs);
/// Nef PL functions, each replaced by the region it determines.
Rat intersection(const std::vector<PLFunction>& hs);

struct Atom {
  MonomialValuation valuation;  // normalized
  Rat mass;
};

struct AtomicMeasure {
  std::vector<Atom> atoms;
  Rat total_mass() const;
  /// sum over atoms of mass * g(nu).
  Rat integrate(const FormalPshToric& g) const;
};

struct MongeAmpere {
  AtomicMeasure measure;
  Fan fan;  // determination fan carrying the atoms
};

/// MA(g_1, ..., g_{n-1}) with atoms on the interior rays of the normal fan
/// refinement of the inputs.
MongeAmpere monge_ampere_on_fan(const std::vector<FormalPshToric>& gs);
AtomicMeasure monge_ampere(const std::vector<FormalPshToric>& gs);

/// integral of -u-hat against MA(phi-hat, ..., phi-hat).
Rat generalized_lelong(const PshGerm& u, const PshGerm& phi);

/// Region {m >= 0 : <w, m> >= 1} of the largest g with g(nu_w) = -1.
FormalPshToric extremal_weight_region(const RatVec& w);

/// -u-hat(nu_w) for normalized w.
Rat relative_type(const PshGerm& u, const RatVec& w);
/// sup{c : u-hat <= c * g_w} with g_w the extremal function, computed from
/// the region containment P(u) in c * E_w.
Rat relative_type_by_domination(const PshGerm& u, const RatVec& w);

struct TheoremAReport {
  bool regions_equal = false;      // (1)
  bool multipliers_equal = false;  // (2)
  bool types_equal = false;        // (3)
  bool lelong_equal = false;       // (4)
  Rat cap;                         // largest c at which multiplier ideals were compared
  std::vector<std::string> notes;
  /// (1) <=> (2) <=> (3) and (1) => (4).
  bool consistent() const;
  /// (4) holds while (1) fails: the open converse would be refuted.
  bool converse_witness() const { return lelong_equal && !regions_equal; }
};
/// Compares u and v through the four conditions. The weights are extended by
/// the positive facet normals of both transforms; phis must be primary-backed.
TheoremAReport theoremA_check(const PshGerm& u, const PshGerm& v, const std::vector<RatVec>& weights,
                              const std::vector<PshGerm>& phis);

}  // namespace valuix
