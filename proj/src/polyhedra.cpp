#include "valuix/polyhedra.hpp"

#include <algorithm>
#include <set>

#include "valuix/linalg.hpp"

namespace valuix::poly {

namespace {

RatVec project(const RatVec& v, const std::vector<std::size_t>& coords) {
  RatVec out;
  out.reserve(coords.size());
  for (auto c : coords) out.push_back(v[c]);
  return out;
}

bool is_subset(const IndexSet& small, const IndexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

ConeFaces cone_facets(const std::vector<RatVec>& gens) {
  ConeFaces out;
  if (gens.empty()) return out;
  const std::size_t ambient = gens[0].size();

  // A maximal independent subset spans the same space.
  Matrix span;
  for (const auto& g : gens) {
    span.push_back(g);
    if (linalg::rank(span) < span.size()) span.pop_back();
    if (span.size() == ambient) break;
  }
  // Pick coordinates on which the projection of the span stays injective.
  std::size_t current = 0;
  for (std::size_t c = 0; c < ambient; ++c) {
    auto trial = out.projection;
    trial.push_back(c);
    Matrix m;
    for (const auto& g : span) m.push_back(project(g, trial));
    std::size_t r = linalg::rank(m);
    if (r > current) {
      out.projection = std::move(trial);
      current = r;
    }
  }
  out.dim = current;
  const std::size_t d = current;
  if (d == 0) return out;

  std::vector<RatVec> pg;
  pg.reserve(gens.size());
  for (const auto& g : gens) pg.push_back(project(g, out.projection));

  if (d == 1) {
    // A ray: the only facet is the apex.
    RatVec normal{pg[0][0] > 0 ? Rat(1) : Rat(-1)};
    out.facets.push_back({{}, normal});
    return out;
  }

  // Double description: the facet normals are the extreme rays of the dual
  // cone. Start from a simplicial cone on d independent generators and add
  // the remaining generators one at a time.
  IndexSet basis;
  {
    Matrix m;
    for (std::size_t i = 0; i < pg.size() && basis.size() < d; ++i) {
      m.push_back(pg[i]);
      if (linalg::rank(m) > basis.size()) basis.push_back(i);
      else m.pop_back();
    }
  }
  struct Work {
    RatVec normal;
    IndexSet tight;
  };
  std::vector<Work> facets;
  {
    Matrix b;
    for (auto i : basis) b.push_back(pg[i]);
    for (std::size_t j = 0; j < d; ++j) {
      RatVec e(d, Rat(0));
      e[j] = 1;
      auto u = linalg::solve(b, e);
      IndexSet tight;
      for (std::size_t k = 0; k < d; ++k)
        if (k != j) tight.push_back(basis[k]);
      facets.push_back({to_rat(primitive(*u)), std::move(tight)});
    }
  }
  std::vector<bool> in_basis(pg.size(), false);
  for (auto i : basis) in_basis[i] = true;
  for (std::size_t g = 0; g < pg.size(); ++g) {
    if (in_basis[g]) continue;
    std::vector<Rat> val(facets.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      val[f] = dot(facets[f].normal, pg[g]);
      if (val[f] > 0) pos.push_back(f);
      else if (val[f] < 0) neg.push_back(f);
    }
    std::vector<Work> next;
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        IndexSet common;
        std::set_intersection(facets[p].tight.begin(), facets[p].tight.end(), facets[q].tight.begin(),
                              facets[q].tight.end(), std::back_inserter(common));
        if (common.size() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < facets.size() && adjacent; ++r)
          if (r != p && r != q && is_subset(common, facets[r].tight)) adjacent = false;
        if (!adjacent) continue;
        RatVec a(d);
        for (std::size_t k = 0; k < d; ++k) a[k] = val[p] * facets[q].normal[k] - val[q] * facets[p].normal[k];
        common.insert(std::upper_bound(common.begin(), common.end(), g), g);
        next.push_back({to_rat(primitive(a)), std::move(common)});
      }
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (val[f] < 0) continue;
      if (val[f].is_zero()) {
        auto& t = facets[f].tight;
        t.insert(std::upper_bound(t.begin(), t.end(), g), g);
      }
      next.push_back(std::move(facets[f]));
    }
    facets = std::move(next);
  }
  for (auto& f : facets) {
    out.facets.push_back({std::move(f.tight), std::move(f.normal)});
  }
  return out;
}

IndexSet extreme_rays(const std::vector<RatVec>& gens) {
  IndexSet out;
  if (gens.empty()) return out;
  auto faces = cone_facets(gens);
  if (faces.dim <= 1) {
    out.push_back(0);
    return out;
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Matrix normals;
    for (const auto& f : faces.facets)
      if (std::binary_search(f.tight.begin(), f.tight.end(), i)) normals.push_back(f.normal);
    if (!normals.empty() && linalg::rank(normals) == faces.dim - 1) out.push_back(i);
  }
  return out;
}

namespace {

void pull(const std::vector<RatVec>& gens, const std::vector<std::size_t>& key,
          const IndexSet& subset, std::vector<IndexSet>& out) {
  std::vector<RatVec> local;
  local.reserve(subset.size());
  for (auto i : subset) local.push_back(gens[i]);
  auto faces = cone_facets(local);
  if (faces.dim == subset.size()) {
    out.push_back(subset);
    return;
  }
  std::size_t apex = 0;
  for (std::size_t j = 1; j < subset.size(); ++j)
    if (key[subset[j]] < key[subset[apex]]) apex = j;
  for (const auto& f : faces.facets) {
    if (std::binary_search(f.tight.begin(), f.tight.end(), apex)) continue;
    IndexSet face;
    for (auto t : f.tight) face.push_back(subset[t]);
    std::vector<IndexSet> sub;
    pull(gens, key, face, sub);
    for (auto& s : sub) {
      s.push_back(subset[apex]);
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

std::vector<IndexSet> pulling_triangulation(const std::vector<RatVec>& gens,
                                            const std::vector<std::size_t>& key) {
  std::vector<IndexSet> out;
  if (gens.empty()) return out;
  IndexSet all(gens.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  pull(gens, key, all, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexSet> triangulate_polytope(const std::vector<RatVec>& points) {
  std::vector<RatVec> homog;
  homog.reserve(points.size());
  for (const auto& p : points) {
    RatVec h{Rat(1)};
    h.insert(h.end(), p.begin(), p.end());
    homog.push_back(std::move(h));
  }
  // Lexicographic order of the points is the pulling priority.
  IndexSet order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  std::vector<std::size_t> key(points.size());
  for (std::size_t r = 0; r < order.size(); ++r) key[order[r]] = r;
  return pulling_triangulation(homog, key);
}

}  // namespace valuix::poly
