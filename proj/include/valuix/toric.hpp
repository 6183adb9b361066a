#pragma once

// Toric models over the origin: simplicial fans refining the positive
// orthant, PL functions on them (Cartier divisors), dual complexes and the
// retraction onto a model.

#include <vector>

#include "valuix/region.hpp"
#include "valuix/valuation.hpp"

namespace valuix {

using RayIndices = std::vector<std::size_t>;

/// Complete simplicial fan supported on the orthant. Every maximal cone is
/// full-dimensional and lists the indices of its n rays.
class Fan {
 public:
  /// Validates primitivity, simplicity and that the cones tile the orthant.
  Fan(std::size_t n, std::vector<IntVec> rays, std::vector<RayIndices> cones);
  static Fan orthant(std::size_t n);
  /// Collects distinct rays in lexicographic order.
  static Fan from_cones(std::size_t n, const std::vector<std::vector<IntVec>>& cones);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<RayIndices>& cones() const { return cones_; }

  bool is_smooth(std::size_t cone) const;
  bool is_smooth() const;
  /// Rays with all coordinates positive.
  RayIndices interior_rays() const;
  std::size_t ray_index(const IntVec& ray) const;  // throws when absent

  struct Location {
    std::size_t cone;
    RatVec coords;  // w = sum_j coords[j] * rays[cones[cone][j]], coords >= 0
  };
  /// A maximal cone containing w >= 0 (the first one in cone order).
  Location locate(const RatVec& w) const;

  /// Same rays and cones as sets.
  friend bool operator==(const Fan& a, const Fan& b);

 private:
  void validate() const;
  std::size_t dim_;
  std::vector<IntVec> rays_;
  std::vector<RayIndices> cones_;
};

/// Stellar subdivision of the face spanned by `face_rays` at `new_ray`,
/// which must lie in the relative interior of that face.
Fan star_subdivision(const Fan& f, const std::vector<IntVec>& face_rays, const IntVec& new_ray);
/// Stellar subdivision at `new_ray` of the smallest face containing it.
Fan subdivide_at(const Fan& f, const IntVec& new_ray);

/// Coarsest simplicial refinement of both fans obtained from the pairwise
/// intersections (triangulated without new rays).
Fan common_refinement(const Fan& a, const Fan& b);

/// Fan on which -support_value(P, .) is linear on every cone, for all the
/// given regions at once.
Fan normal_fan_refinement(const std::vector<NewtonRegion>& regions);

class PLFunction {
 public:
  PLFunction(Fan fan, RatVec values);

  const Fan& fan() const { return fan_; }
  const RatVec& values() const { return values_; }
  Rat operator()(const RatVec& w) const;
  /// l with h = <l, .> on the given cone.
  RatVec linear_piece(std::size_t cone) const;

 private:
  Fan fan_;
  RatVec values_;
};

/// Incarnation of g_P on the fan: values -support_value(P, e) on rays.
PLFunction pl_from_region(const NewtonRegion& p, const Fan& f);

/// h <= 0 on rays and convex across every interior wall.
bool is_nef(const PLFunction& h);

struct DualComplex {
  std::vector<IntVec> vertices;            // interior rays of the fan
  std::vector<std::int64_t> b;             // b_e = min_i e_i
  std::vector<RayIndices> faces;           // maximal faces, indices into vertices
  std::size_t dim;

  MonomialValuation vertex_valuation(std::size_t i) const;
  /// Point with normalized chart coordinates t (t >= 0, sum t = 1) in a face:
  /// the weight vector sum_j (t_j / b_j) e_j.
  RatVec point(std::size_t face, const RatVec& t) const;
  /// Whether the ray through w meets the complex.
  bool contains_direction(const RatVec& w) const;
};

/// Cones all of whose rays are interior. Throws when there is no interior ray.
DualComplex dual_complex(const Fan& f);

struct Retraction {
  std::size_t cone;
  RatVec chart_weights;  // nu of the chart monomials (dual basis), all >= 0
  MonomialValuation valuation;
};
/// Finds the chart of the fan containing the center of nu and reads off the
/// monomial weights there.
Retraction retract(const ShiftedMonomialValuation& nu, const Fan& f);
MonomialValuation retract_check(const ShiftedMonomialValuation& nu, const Fan& f);

}  // namespace valuix
