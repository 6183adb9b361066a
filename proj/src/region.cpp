#include "valuix/region.hpp"

#include <algorithm>

#include "valuix/linalg.hpp"
#include "valuix/polyhedra.hpp"

namespace valuix {

namespace {

Rat factorial(std::size_t n) {
  Rat f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= Rat(static_cast<long>(i));
  return f;
}

}  // namespace

NewtonRegion NewtonRegion::whole_orthant(std::size_t n) {
  if (n == 0) throw Error("region dimension must be positive");
  NewtonRegion r;
  r.dim_ = n;
  r.trivial_ = true;
  r.generators_ = {RatVec(n, Rat(0))};
  return r;
}

NewtonRegion NewtonRegion::from_points(std::vector<RatVec> points) {
  if (points.empty()) throw Error("region_from_points: empty point set");
  const std::size_t n = points[0].size();
  if (n == 0) throw Error("region_from_points: zero-dimensional points");
  for (const auto& p : points) {
    if (p.size() != n) throw Error("region_from_points: dimension mismatch");
    if (!all_nonnegative(p)) throw Error("region_from_points: negative coordinate");
  }
  for (const auto& p : points)
    if (std::all_of(p.begin(), p.end(), [](const Rat& x) { return x.is_zero(); }))
      return whole_orthant(n);

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // Dominated points never pass the vertex test below.
  const std::vector<RatVec>& kept = points;

  // Homogenize: P = conv(kept) + orthant is the slice t = 1 of the cone
  // spanned by (1, p) and the recession directions (0, e_i).
  std::vector<RatVec> homog;
  for (const auto& p : kept) {
    RatVec h{Rat(1)};
    h.insert(h.end(), p.begin(), p.end());
    homog.push_back(std::move(h));
  }
  for (std::size_t i = 0; i < n; ++i) {
    RatVec h(n + 1, Rat(0));
    h[i + 1] = 1;
    homog.push_back(std::move(h));
  }
  auto faces = poly::cone_facets(homog);

  NewtonRegion r;
  r.dim_ = n;
  std::vector<std::vector<RatVec>> tight_normals(kept.size());
  for (const auto& f : faces.facets) {
    RatVec a(f.normal.begin() + 1, f.normal.end());
    if (std::all_of(a.begin(), a.end(), [](const Rat& x) { return x.is_zero(); }))
      continue;  // the face at infinity
    for (auto t : f.tight)
      if (t < kept.size()) tight_normals[t].push_back(f.normal);
    IntVec prim = primitive(a);
    std::size_t j = 0;
    while (a[j].is_zero()) ++j;
    Rat factor = Rat(prim[j]) / a[j];
    Rat offset = -f.normal[0] * factor;
    if (offset > 0) r.facets_.push_back({to_rat(prim), offset});
  }
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (linalg::rank(tight_normals[i]) == n) r.generators_.push_back(kept[i]);
  std::sort(r.facets_.begin(), r.facets_.end(), [](const Halfspace& x, const Halfspace& y) {
    return x.normal < y.normal || (x.normal == y.normal && x.offset < y.offset);
  });
  return r;
}

NewtonRegion NewtonRegion::from_halfspaces(std::size_t n, const std::vector<Halfspace>& hs) {
  std::vector<Halfspace> all;
  for (const auto& h : hs) {
    if (h.normal.size() != n) throw Error("from_halfspaces: dimension mismatch");
    if (!all_nonnegative(h.normal) ||
        std::all_of(h.normal.begin(), h.normal.end(), [](const Rat& x) { return x.is_zero(); }))
      throw Error("from_halfspaces: normals must be nonzero and >= 0");
    if (h.offset > 0) all.push_back(h);
  }
  if (all.empty()) return whole_orthant(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n, Rat(0));
    e[i] = 1;
    all.push_back({e, Rat(0)});
  }
  std::vector<RatVec> vertices;
  poly::for_each_subset(all.size(), n, [&](const poly::IndexSet& sub) {
    Matrix a;
    RatVec b;
    for (auto i : sub) {
      a.push_back(all[i].normal);
      b.push_back(all[i].offset);
    }
    auto x = linalg::solve(a, b);
    if (!x) return true;
    for (const auto& h : all)
      if (dot(h.normal, *x) < h.offset) return true;
    vertices.push_back(std::move(*x));
    return true;
  });
  return from_points(std::move(vertices));
}

bool NewtonRegion::has_bounded_complement() const {
  if (trivial_) return true;
  for (std::size_t i = 0; i < dim_; ++i) {
    bool hit = false;
    for (const auto& g : generators_) {
      bool on_axis = true;
      for (std::size_t j = 0; j < dim_ && on_axis; ++j)
        on_axis = j == i || g[j].is_zero();
      hit = hit || on_axis;
    }
    if (!hit) return false;
  }
  return true;
}

Rat NewtonRegion::support_value(const RatVec& w) const {
  if (w.size() != dim_) throw Error("support_value: dimension mismatch");
  if (!all_nonnegative(w)) throw Error("support_value: negative weight");
  Rat best = dot(w, generators_[0]);
  for (std::size_t i = 1; i < generators_.size(); ++i) {
    Rat v = dot(w, generators_[i]);
    if (v < best) best = v;
  }
  return best;
}

bool NewtonRegion::contains(const RatVec& m, bool strict) const {
  if (m.size() != dim_) throw Error("contains: dimension mismatch");
  if (!all_nonnegative(m)) return false;
  for (const auto& f : facets_) {
    Rat v = dot(f.normal, m);
    if (strict ? v <= f.offset : v < f.offset) return false;
  }
  return true;
}

Extended NewtonRegion::order_of(const RatVec& m) const {
  if (m.size() != dim_) throw Error("order_of: dimension mismatch");
  if (trivial_) return Extended::infinity();
  Rat best = dot(facets_[0].normal, m) / facets_[0].offset;
  for (std::size_t i = 1; i < facets_.size(); ++i) {
    Rat v = dot(facets_[i].normal, m) / facets_[i].offset;
    if (v < best) best = v;
  }
  return best;
}

Rat NewtonRegion::covolume() const {
  if (trivial_) return 0;
  if (!has_bounded_complement())
    throw Error("covolume: complement is unbounded (ideal is not primary)");
  // The complement is star-shaped from the origin and bounded by the compact
  // facets, so it is the union of the pyramids over those facets.
  Rat total = 0;
  for (const auto& f : facets_) {
    std::vector<RatVec> pts;
    for (const auto& g : generators_)
      if (dot(f.normal, g) == f.offset) pts.push_back(g);
    for (const auto& simplex : poly::triangulate_polytope(pts)) {
      Matrix m;
      for (auto i : simplex) m.push_back(pts[i]);
      Rat d = linalg::determinant(m);
      total += d < 0 ? Rat(-d) : d;
    }
  }
  return total / factorial(dim_);
}

NewtonRegion region_from_points(const std::vector<RatVec>& points) {
  return NewtonRegion::from_points(points);
}

NewtonRegion minkowski_sum(const NewtonRegion& a, const NewtonRegion& b) {
  if (a.dim() != b.dim()) throw Error("minkowski_sum: dimension mismatch");
  if (a.is_trivial()) return b;
  if (b.is_trivial()) return a;
  std::vector<RatVec> pts;
  for (const auto& p : a.generators())
    for (const auto& q : b.generators()) pts.push_back(add(p, q));
  return NewtonRegion::from_points(std::move(pts));
}

NewtonRegion union_hull(const NewtonRegion& a, const NewtonRegion& b) {
  if (a.dim() != b.dim()) throw Error("union_hull: dimension mismatch");
  std::vector<RatVec> pts = a.generators();
  pts.insert(pts.end(), b.generators().begin(), b.generators().end());
  return NewtonRegion::from_points(std::move(pts));
}

NewtonRegion NewtonRegion::dilated(const Rat& c) const {
  if (c <= 0) throw Error("scale: factor must be positive");
  if (trivial_) return *this;
  NewtonRegion r = *this;
  for (auto& g : r.generators_) g = scaled(g, c);
  for (auto& f : r.facets_) f.offset *= c;
  return r;
}

NewtonRegion scale(const NewtonRegion& p, const Rat& c) { return p.dilated(c); }

bool is_subregion(const NewtonRegion& p1, const NewtonRegion& p2) {
  if (p1.dim() != p2.dim()) throw Error("is_subregion: dimension mismatch");
  for (const auto& g : p1.generators())
    if (!p2.contains(g)) return false;
  return true;
}

}  // namespace valuix
