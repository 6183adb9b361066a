#pragma once

// Exact face enumeration for small pointed cones and polytopes (ambient
// dimension at most 5 after homogenization). Everything is brute force over
// subsets of generators; that is adequate for the desk-scale inputs the
// library targets and keeps the code obviously correct.

#include <cstddef>
#include <vector>

#include "valuix/rational.hpp"

namespace valuix::poly {

using IndexSet = std::vector<std::size_t>;

struct ConeFacet {
  IndexSet tight;  // generators lying on the facet, sorted
  /// Inner normal. In ambient coordinates when the cone is full-dimensional,
  /// otherwise in the coordinates of `projection` below.
  RatVec normal;
};

struct ConeFaces {
  std::size_t dim = 0;
  std::vector<std::size_t> projection;  // coordinates used to chart the span
  std::vector<ConeFacet> facets;
};

/// Facets of the pointed cone spanned by `gens`, relative to its linear span.
ConeFaces cone_facets(const std::vector<RatVec>& gens);

/// Indices of generators spanning extreme rays. Generators must be nonzero
/// and pairwise non-parallel.
IndexSet extreme_rays(const std::vector<RatVec>& gens);

/// Pulling triangulation of cone(gens) without new rays. Every generator must
/// be an extreme ray. `key[i]` is a global priority; cones sharing a face and
/// triangulated with the same keys induce the same triangulation on it.
std::vector<IndexSet> pulling_triangulation(const std::vector<RatVec>& gens,
                                            const std::vector<std::size_t>& key);

/// Triangulation of conv(points) into simplices (as index sets), points
/// assumed to be the vertices of the polytope.
std::vector<IndexSet> triangulate_polytope(const std::vector<RatVec>& points);

/// Calls `visit` with every k-subset of {0..n-1} in lexicographic order.
/// Stops early when `visit` returns false.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  IndexSet idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(static_cast<const IndexSet&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace valuix::poly
