#pragma once

// Monomial ideals, toric formal psh functions and psh germs
// u = sum_i c_i log|a_i| with monomial ideals a_i.

#include <vector>

#include "valuix/region.hpp"

namespace valuix {

/// Monomial ideal given by a set of generators minimal under divisibility.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t n, std::vector<IntVec> generators);
  static MonomialIdeal unit(std::size_t n);
  /// Maximal ideal (x_1, ..., x_n).
  static MonomialIdeal maximal(std::size_t n);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVec>& generators() const { return generators_; }

  bool is_unit() const;
  /// Some pure power of every variable lies in the ideal.
  bool is_primary() const;
  bool contains(const IntVec& monomial) const;
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t dim_;
  std::vector<IntVec> generators_;
};

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, unsigned k);

/// Newton polyhedron of a monomial ideal.
NewtonRegion region_of(const MonomialIdeal& a);

/// Toric formal psh function g(w) = -support_value(region, w).
class FormalPshToric {
 public:
  explicit FormalPshToric(NewtonRegion region) : region_(std::move(region)) {}
  static FormalPshToric zero(std::size_t n) { return FormalPshToric(NewtonRegion::whole_orthant(n)); }
  static FormalPshToric log_of(const MonomialIdeal& a) { return FormalPshToric(region_of(a)); }

  const NewtonRegion& region() const { return region_; }
  std::size_t dim() const { return region_.dim(); }
  bool is_zero() const { return region_.is_trivial(); }

  /// g(nu_w) for a weight vector w >= 0.
  Rat operator()(const RatVec& w) const { return -region_.support_value(w); }

  FormalPshToric scaled(const Rat& c) const { return FormalPshToric(scale(region_, c)); }

  friend bool operator==(const FormalPshToric&, const FormalPshToric&) = default;

 private:
  NewtonRegion region_;
};

/// Pointwise max: the region of the ideal sum.
FormalPshToric divisor_max(const FormalPshToric& g1, const FormalPshToric& g2);
/// Pointwise sum: the region of the ideal product.
FormalPshToric divisor_sum(const FormalPshToric& g1, const FormalPshToric& g2);

/// u = sum_i c_i log|a_i| with c_i > 0.
class PshGerm {
 public:
  struct Term {
    Rat c;
    MonomialIdeal ideal;
  };

  PshGerm(std::size_t n, std::vector<Term> terms);
  static PshGerm log_of(const MonomialIdeal& a, const Rat& c = 1) { return PshGerm(a.dim(), {{c, a}}); }

  std::size_t dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }

  /// Concatenation of presentations: log-sum of the germs.
  friend PshGerm operator+(const PshGerm& u, const PshGerm& v);

 private:
  std::size_t dim_;
  std::vector<Term> terms_;
};

/// Valuative transform u-hat as a toric formal psh function.
FormalPshToric transform(const PshGerm& u);

/// Lelong number at 0: -u-hat(nu_m).
Rat lelong_number(const PshGerm& u);

}  // namespace valuix
