#include "valuix/toric.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "valuix/linalg.hpp"
#include "valuix/polyhedra.hpp"

namespace valuix {

namespace {

Matrix ray_matrix(const std::vector<IntVec>& rays, const RayIndices& idx) {
  Matrix m;
  for (auto i : idx) m.push_back(to_rat(rays[i]));
  return m;
}

// u_j with <u_j, r_k> = delta_jk for the rows r_k of m.
std::vector<RatVec> dual_basis(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<RatVec> out;
  for (std::size_t j = 0; j < n; ++j) {
    RatVec e(n, Rat(0));
    e[j] = 1;
    auto u = linalg::solve(m, e);
    if (!u) throw Error("fan: singular cone");
    out.push_back(std::move(*u));
  }
  return out;
}

bool is_interior(const IntVec& r) {
  return std::all_of(r.begin(), r.end(), [](auto x) { return x > 0; });
}

// Extreme rays (primitive) of {w : <h, w> >= 0 for all h}, when full-dimensional.
std::vector<IntVec> cone_from_inequalities(const std::vector<RatVec>& hs, std::size_t n) {
  std::set<IntVec> rays;
  poly::for_each_subset(hs.size(), n - 1, [&](const poly::IndexSet& sub) {
    Matrix a;
    for (auto i : sub) a.push_back(hs[i]);
    auto ns = linalg::nullspace(a, n);
    if (ns.size() != 1) return true;
    for (Rat sign : {Rat(1), Rat(-1)}) {
      RatVec d = scaled(ns[0], sign);
      bool ok = std::all_of(hs.begin(), hs.end(), [&](const RatVec& h) { return dot(h, d) >= 0; });
      if (ok) rays.insert(primitive(d));
    }
    return true;
  });
  std::vector<IntVec> out(rays.begin(), rays.end());
  Matrix m;
  for (const auto& r : out) m.push_back(to_rat(r));
  if (linalg::rank(m) < n) return {};
  return out;
}

// Triangulates every cone with a pulling order shared across cones.
Fan triangulate_cones(std::size_t n, const std::vector<std::vector<IntVec>>& cones) {
  std::set<IntVec> all;
  for (const auto& c : cones) all.insert(c.begin(), c.end());
  std::vector<IntVec> order(all.begin(), all.end());
  auto rank_of = [&](const IntVec& r) {
    return static_cast<std::size_t>(std::lower_bound(order.begin(), order.end(), r) - order.begin());
  };
  std::vector<std::vector<IntVec>> simplices;
  for (const auto& c : cones) {
    std::vector<RatVec> gens;
    std::vector<std::size_t> key;
    for (const auto& r : c) {
      gens.push_back(to_rat(r));
      key.push_back(rank_of(r));
    }
    for (const auto& s : poly::pulling_triangulation(gens, key)) {
      std::vector<IntVec> simplex;
      for (auto i : s) simplex.push_back(c[i]);
      simplices.push_back(std::move(simplex));
    }
  }
  return Fan::from_cones(n, simplices);
}

}  // namespace

Fan::Fan(std::size_t n, std::vector<IntVec> rays, std::vector<RayIndices> cones)
    : dim_(n), rays_(std::move(rays)), cones_(std::move(cones)) {
  for (auto& c : cones_) std::sort(c.begin(), c.end());
  validate();
}

void Fan::validate() const {
  const std::size_t n = dim_;
  if (n == 0) throw Error("fan: dimension must be positive");
  std::set<IntVec> seen;
  for (const auto& r : rays_) {
    if (r.size() != n) throw Error("fan: ray dimension mismatch");
    for (auto x : r)
      if (x < 0) throw Error("fan: rays must lie in the orthant");
    if (std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; })) throw Error("fan: zero ray");
    if (primitive(r) != r) throw Error("fan: ray " + to_string(r) + " is not primitive");
    if (!seen.insert(r).second) throw Error("fan: duplicate ray " + to_string(r));
  }
  if (cones_.empty()) throw Error("fan: no cones");
  for (const auto& c : cones_) {
    if (c.size() != n) throw Error("fan: every maximal cone needs exactly n rays");
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] >= rays_.size()) throw Error("fan: ray index out of range");
      if (i > 0 && c[i] == c[i - 1]) throw Error("fan: repeated ray in a cone");
    }
    if (linalg::determinant(ray_matrix(rays_, c)).is_zero()) throw Error("fan: degenerate cone");
  }
  // Walls: boundary walls lie in a coordinate hyperplane and bound one cone,
  // interior walls separate exactly two cones lying on opposite sides.
  std::map<RayIndices, std::vector<std::pair<std::size_t, std::size_t>>> walls;
  for (std::size_t k = 0; k < cones_.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) {
      RayIndices w;
      for (std::size_t i = 0; i < n; ++i)
        if (i != j) w.push_back(cones_[k][i]);
      walls[w].emplace_back(k, cones_[k][j]);
    }
  for (const auto& [w, sides] : walls) {
    bool boundary = false;
    for (std::size_t i = 0; i < n && !boundary; ++i)
      boundary = std::all_of(w.begin(), w.end(), [&](auto r) { return rays_[r][i] == 0; });
    if (boundary) {
      if (sides.size() != 1) throw Error("fan: cones overlap along the orthant boundary");
      continue;
    }
    if (sides.size() != 2) throw Error("fan: cones do not tile the orthant");
    auto normal = linalg::nullspace(ray_matrix(rays_, w), n).at(0);
    Rat s1 = dot(normal, rays_[sides[0].second]);
    Rat s2 = dot(normal, rays_[sides[1].second]);
    if ((s1 > 0) == (s2 > 0)) throw Error("fan: overlapping cones");
  }
  // Degree one: a generic interior point is in exactly one cone.
  RatVec p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = 1 + Rat(static_cast<long>(i + 1), 997 + 61 * static_cast<long>(i * i));
  std::size_t hits = 0;
  for (const auto& c : cones_) {
    auto x = linalg::coordinates(ray_matrix(rays_, c), p);
    if (x && all_nonnegative(*x)) ++hits;
  }
  if (hits != 1) throw Error("fan: cones do not cover the orthant exactly once");
}

Fan Fan::orthant(std::size_t n) {
  std::vector<IntVec> rays;
  RayIndices cone;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    rays.push_back(e);
    cone.push_back(i);
  }
  return Fan(n, rays, {cone});
}

Fan Fan::from_cones(std::size_t n, const std::vector<std::vector<IntVec>>& cones) {
  std::set<IntVec> all;
  for (const auto& c : cones) all.insert(c.begin(), c.end());
  std::vector<IntVec> rays(all.begin(), all.end());
  std::vector<RayIndices> idx;
  for (const auto& c : cones) {
    RayIndices k;
    for (const auto& r : c)
      k.push_back(static_cast<std::size_t>(std::lower_bound(rays.begin(), rays.end(), r) - rays.begin()));
    std::sort(k.begin(), k.end());
    idx.push_back(std::move(k));
  }
  std::sort(idx.begin(), idx.end());
  return Fan(n, std::move(rays), std::move(idx));
}

bool Fan::is_smooth(std::size_t cone) const {
  Rat d = linalg::determinant(ray_matrix(rays_, cones_.at(cone)));
  return d == 1 || d == -1;
}

bool Fan::is_smooth() const {
  for (std::size_t k = 0; k < cones_.size(); ++k)
    if (!is_smooth(k)) return false;
  return true;
}

RayIndices Fan::interior_rays() const {
  RayIndices out;
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (is_interior(rays_[i])) out.push_back(i);
  return out;
}

std::size_t Fan::ray_index(const IntVec& ray) const {
  auto it = std::find(rays_.begin(), rays_.end(), ray);
  if (it == rays_.end()) throw Error("fan: " + to_string(ray) + " is not a ray");
  return static_cast<std::size_t>(it - rays_.begin());
}

Fan::Location Fan::locate(const RatVec& w) const {
  if (w.size() != dim_) throw Error("locate: dimension mismatch");
  if (!all_nonnegative(w)) throw Error("locate: weight outside the orthant");
  for (std::size_t k = 0; k < cones_.size(); ++k) {
    auto x = linalg::coordinates(ray_matrix(rays_, cones_[k]), w);
    if (x && all_nonnegative(*x)) return {k, std::move(*x)};
  }
  throw Error("locate: no cone contains " + to_string(w));
}

bool operator==(const Fan& a, const Fan& b) {
  auto canon = [](const Fan& f) {
    std::vector<std::vector<IntVec>> out;
    for (const auto& c : f.cones()) {
      std::vector<IntVec> rays;
      for (auto i : c) rays.push_back(f.rays()[i]);
      std::sort(rays.begin(), rays.end());
      out.push_back(std::move(rays));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return a.dim() == b.dim() && canon(a) == canon(b);
}

Fan star_subdivision(const Fan& f, const std::vector<IntVec>& face_rays, const IntVec& new_ray) {
  const std::size_t n = f.dim();
  if (new_ray.size() != n) throw Error("star_subdivision: dimension mismatch");
  if (face_rays.empty()) throw Error("star_subdivision: empty face");
  if (primitive(new_ray) != new_ray) throw Error("star_subdivision: new ray must be primitive");
  if (std::find(f.rays().begin(), f.rays().end(), new_ray) != f.rays().end())
    throw Error("star_subdivision: " + to_string(new_ray) + " is already a ray");
  RayIndices face;
  std::vector<RatVec> basis;
  for (const auto& r : face_rays) {
    face.push_back(f.ray_index(r));
    basis.push_back(to_rat(r));
  }
  std::sort(face.begin(), face.end());
  auto coords = linalg::coordinates(basis, to_rat(new_ray));
  if (!coords || !all_positive(*coords))
    throw Error("star_subdivision: new ray is not in the relative interior of the face");
  bool is_face = false;
  std::vector<IntVec> rays = f.rays();
  rays.push_back(new_ray);
  const std::size_t r = rays.size() - 1;
  std::vector<RayIndices> cones;
  for (const auto& c : f.cones()) {
    if (!std::includes(c.begin(), c.end(), face.begin(), face.end())) {
      cones.push_back(c);
      continue;
    }
    is_face = true;
    for (auto rho : face) {
      RayIndices d;
      for (auto i : c)
        if (i != rho) d.push_back(i);
      d.push_back(r);
      cones.push_back(std::move(d));
    }
  }
  if (!is_face) throw Error("star_subdivision: rays do not span a face of the fan");
  return Fan(n, std::move(rays), std::move(cones));
}

Fan subdivide_at(const Fan& f, const IntVec& new_ray) {
  auto loc = f.locate(to_rat(new_ray));
  std::vector<IntVec> face;
  for (std::size_t j = 0; j < f.dim(); ++j)
    if (loc.coords[j] > 0) face.push_back(f.rays()[f.cones()[loc.cone][j]]);
  return star_subdivision(f, face, new_ray);
}

Fan common_refinement(const Fan& a, const Fan& b) {
  if (a.dim() != b.dim()) throw Error("common_refinement: dimension mismatch");
  const std::size_t n = a.dim();
  std::vector<std::vector<RatVec>> ha, hb;
  for (const auto& c : a.cones()) ha.push_back(dual_basis(ray_matrix(a.rays(), c)));
  for (const auto& c : b.cones()) hb.push_back(dual_basis(ray_matrix(b.rays(), c)));
  std::vector<std::vector<IntVec>> cells;
  for (const auto& x : ha)
    for (const auto& y : hb) {
      std::vector<RatVec> hs = x;
      hs.insert(hs.end(), y.begin(), y.end());
      auto rays = cone_from_inequalities(hs, n);
      if (!rays.empty()) cells.push_back(std::move(rays));
    }
  return triangulate_cones(n, cells);
}

Fan normal_fan_refinement(const std::vector<NewtonRegion>& regions) {
  if (regions.empty()) throw Error("normal_fan_refinement: no regions");
  const std::size_t n = regions[0].dim();
  NewtonRegion s = NewtonRegion::whole_orthant(n);
  for (const auto& p : regions) s = minkowski_sum(s, p);
  std::vector<std::vector<IntVec>> cells;
  for (const auto& v : s.generators()) {
    std::set<IntVec> gens;
    for (const auto& h : s.facets())
      if (dot(h.normal, v) == h.offset) gens.insert(primitive(h.normal));
    for (std::size_t i = 0; i < n; ++i)
      if (v[i].is_zero()) {
        IntVec e(n, 0);
        e[i] = 1;
        gens.insert(e);
      }
    cells.emplace_back(gens.begin(), gens.end());
  }
  return triangulate_cones(n, cells);
}

PLFunction::PLFunction(Fan fan, RatVec values) : fan_(std::move(fan)), values_(std::move(values)) {
  if (values_.size() != fan_.rays().size()) throw Error("PL function: one value per ray required");
}

RatVec PLFunction::linear_piece(std::size_t cone) const {
  const auto& c = fan_.cones().at(cone);
  RatVec h;
  for (auto i : c) h.push_back(values_[i]);
  auto l = linalg::solve(ray_matrix(fan_.rays(), c), h);
  if (!l) throw Error("PL function: singular cone");
  return *l;
}

Rat PLFunction::operator()(const RatVec& w) const {
  auto loc = fan_.locate(w);
  Rat total = 0;
  for (std::size_t j = 0; j < loc.coords.size(); ++j)
    total += loc.coords[j] * values_[fan_.cones()[loc.cone][j]];
  return total;
}

PLFunction pl_from_region(const NewtonRegion& p, const Fan& f) {
  if (p.dim() != f.dim()) throw Error("pl_from_region: dimension mismatch");
  RatVec values;
  for (const auto& r : f.rays()) values.push_back(-p.support_value(to_rat(r)));
  return PLFunction(f, std::move(values));
}

bool is_nef(const PLFunction& h) {
  for (const auto& x : h.values())
    if (x > 0) return false;
  const auto& fan = h.fan();
  const auto& cones = fan.cones();
  std::vector<RatVec> pieces;
  for (std::size_t k = 0; k < cones.size(); ++k) pieces.push_back(h.linear_piece(k));
  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = 0; b < cones.size(); ++b) {
      if (a == b) continue;
      RayIndices common;
      std::set_intersection(cones[a].begin(), cones[a].end(), cones[b].begin(), cones[b].end(),
                            std::back_inserter(common));
      if (common.size() + 1 != fan.dim()) continue;
      for (auto r : cones[b])
        if (!std::binary_search(common.begin(), common.end(), r) &&
            dot(pieces[a], to_rat(fan.rays()[r])) > h.values()[r])
          return false;
    }
  return true;
}

MonomialValuation DualComplex::vertex_valuation(std::size_t i) const {
  return MonomialValuation(scaled(to_rat(vertices.at(i)), Rat(1) / Rat(b.at(i))));
}

RatVec DualComplex::point(std::size_t face, const RatVec& t) const {
  const auto& f = faces.at(face);
  if (t.size() != f.size()) throw Error("dual complex: wrong number of chart coordinates");
  RatVec w(dim, Rat(0));
  for (std::size_t j = 0; j < f.size(); ++j)
    w = add(w, scaled(to_rat(vertices[f[j]]), t[j] / Rat(b[f[j]])));
  return w;
}

bool DualComplex::contains_direction(const RatVec& w) const {
  for (const auto& f : faces) {
    std::vector<RatVec> basis;
    for (auto i : f) basis.push_back(to_rat(vertices[i]));
    auto x = linalg::coordinates(basis, w);
    if (x && all_nonnegative(*x)) return true;
  }
  return false;
}

DualComplex dual_complex(const Fan& f) {
  DualComplex dc;
  dc.dim = f.dim();
  auto interior = f.interior_rays();
  if (interior.empty()) throw Error("dual_complex: the fan has no interior ray");
  std::map<std::size_t, std::size_t> vertex_of;
  for (auto i : interior) {
    vertex_of[i] = dc.vertices.size();
    dc.vertices.push_back(f.rays()[i]);
    dc.b.push_back(b_value(f.rays()[i]));
  }
  std::set<RayIndices> candidates;
  for (const auto& c : f.cones()) {
    RayIndices face;
    for (auto i : c)
      if (vertex_of.count(i)) face.push_back(vertex_of[i]);
    std::sort(face.begin(), face.end());
    if (!face.empty()) candidates.insert(face);
  }
  for (const auto& x : candidates) {
    bool maximal = true;
    for (const auto& y : candidates)
      if (y.size() > x.size() && std::includes(y.begin(), y.end(), x.begin(), x.end())) maximal = false;
    if (maximal) dc.faces.push_back(x);
  }
  return dc;
}

Retraction retract(const ShiftedMonomialValuation& nu, const Fan& f) {
  if (nu.dim() != f.dim()) throw Error("retract: dimension mismatch");
  // nu(x^u) = <u, W> for Laurent monomials, W = (nu(x_1), ..., nu(x_n));
  // the center lies in the chart whose dual-basis monomials are all >= 0.
  RatVec big_w;
  for (std::size_t i = 0; i < nu.dim(); ++i)
    big_w.push_back(eval_poly(nu, Polynomial::variable(nu.dim(), i)).value());
  for (std::size_t k = 0; k < f.cones().size(); ++k) {
    auto u = dual_basis(ray_matrix(f.rays(), f.cones()[k]));
    RatVec chart;
    for (const auto& uj : u) chart.push_back(dot(uj, big_w));
    if (!all_nonnegative(chart)) continue;
    RatVec w(f.dim(), Rat(0));
    for (std::size_t j = 0; j < chart.size(); ++j)
      w = add(w, scaled(to_rat(f.rays()[f.cones()[k][j]]), chart[j]));
    return {k, chart, MonomialValuation(std::move(w))};
  }
  throw Error("retract: no chart contains the center");
}

MonomialValuation retract_check(const ShiftedMonomialValuation& nu, const Fan& f) {
  return retract(nu, f).valuation;
}

}  // namespace valuix
