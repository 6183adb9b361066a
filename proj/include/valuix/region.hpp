#pragma once

// Newton regions: rational convex sets P = conv(generators) + Q^n_{>=0}.
//
// A region plays three roles at once: the Newton polyhedron of a monomial
// ideal, the nef divisor datum of a toric formal psh function, and (through
// its support function) the function g_P(w) = -min_{m in P} <w, m> on
// weight vectors. All arithmetic is exact.

#include <cstddef>
#include <vector>

#include "valuix/rational.hpp"

namespace valuix {

/// Inequality <normal, m> >= offset with a primitive integral normal >= 0.
struct Halfspace {
  RatVec normal;
  Rat offset;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

class NewtonRegion {
 public:
  /// The whole orthant (origin included): the zero divisor.
  static NewtonRegion whole_orthant(std::size_t n);

  /// Canonical region generated by `points` (all coordinates >= 0).
  static NewtonRegion from_points(std::vector<RatVec> points);

  /// {m >= 0 : <a_j, m> >= b_j for all j}; normals must be >= 0 and nonzero.
  static NewtonRegion from_halfspaces(std::size_t n, const std::vector<Halfspace>& hs);

  std::size_t dim() const { return dim_; }
  /// Vertices, lexicographically sorted. {0} for the trivial region.
  const std::vector<RatVec>& generators() const { return generators_; }
  /// Facets with positive offset; coordinate facets m_i >= 0 are implicit.
  const std::vector<Halfspace>& facets() const { return facets_; }

  bool is_trivial() const { return trivial_; }
  /// True iff every coordinate axis meets the region (bounded complement).
  bool has_bounded_complement() const;

  /// min over the region of <w, m>; w must be componentwise >= 0.
  Rat support_value(const RatVec& w) const;

  /// Facet membership test. `strict` asks for strict inequality on every
  /// facet with positive offset.
  bool contains(const RatVec& m, bool strict = false) const;

  /// Largest t >= 0 with m in t*P (m >= 0); +infinity for the trivial region.
  Extended order_of(const RatVec& m) const;

  /// Volume of Q^n_{>=0} minus the region. Throws for unbounded complements.
  Rat covolume() const;

  /// c * P for c > 0 (vertices and facet offsets scale, normals are kept).
  NewtonRegion dilated(const Rat& c) const;

  friend bool operator==(const NewtonRegion& a, const NewtonRegion& b) {
    return a.dim_ == b.dim_ && a.generators_ == b.generators_;
  }

 private:
  NewtonRegion() = default;
  std::size_t dim_ = 0;
  bool trivial_ = false;
  std::vector<RatVec> generators_;
  std::vector<Halfspace> facets_;
};

NewtonRegion region_from_points(const std::vector<RatVec>& points);
NewtonRegion minkowski_sum(const NewtonRegion& a, const NewtonRegion& b);
NewtonRegion union_hull(const NewtonRegion& a, const NewtonRegion& b);
/// c * P for c > 0.
NewtonRegion scale(const NewtonRegion& p, const Rat& c);

/// P1 is contained in P2 (tested on the generators of P1).
bool is_subregion(const NewtonRegion& p1, const NewtonRegion& p2);

}  // namespace valuix
