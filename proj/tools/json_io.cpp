#include "json_io.hpp"

#include <string>

namespace valuix::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

const json& array_field(const json& j, const char* name) {
  const json& a = field(j, name);
  if (!a.is_array()) throw Error(std::string("field \"") + name + "\" must be an array");
  return a;
}

std::size_t index(const json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw Error("expected a nonnegative integer index");
  return j.get<std::size_t>();
}

void check_length(std::size_t got, std::size_t n, const char* what) {
  if (got != n) {
    throw Error(std::string(what) + " has length " + std::to_string(got) + ", expected " + std::to_string(n));
  }
}

}  // namespace

Rat rat(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  throw Error("rationals must be strings such as \"3/2\" or integers");
}

RatVec rat_vec(const json& j) {
  if (!j.is_array()) throw Error("expected an array of rationals");
  RatVec v;
  for (const auto& x : j) v.push_back(rat(x));
  return v;
}

IntVec int_vec(const json& j) {
  if (!j.is_array()) throw Error("expected an array of integers");
  IntVec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error("expected an integer");
    v.push_back(x.get<std::int64_t>());
  }
  return v;
}

std::size_t dim(const json& j) {
  const json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<std::int64_t>() < 1) throw Error("\"n\" must be a positive integer");
  return n.get<std::size_t>();
}

MonomialIdeal ideal(const json& j) {
  const json& gens = array_field(j, "generators");
  std::size_t n = 0;
  if (j.contains("n")) {
    n = dim(j);
  } else if (!gens.empty() && gens.front().is_array()) {
    n = gens.front().size();
  }
  if (n == 0) throw Error("ideal dimension is unknown: give \"n\"");
  std::vector<IntVec> g;
  for (const auto& e : gens) {
    g.push_back(int_vec(e));
    check_length(g.back().size(), n, "exponent vector");
    for (auto x : g.back()) {
      if (x < 0) throw Error("exponents must be nonnegative");
    }
  }
  if (g.empty()) throw Error("an ideal needs at least one generator");
  return MonomialIdeal(n, std::move(g));
}

PshGerm germ(const json& j) {
  if (!j.is_object()) throw Error("expected a germ object");
  if (!j.contains("terms")) return PshGerm::log_of(ideal(j));
  std::vector<PshGerm::Term> terms;
  for (const auto& t : array_field(j, "terms")) terms.push_back({rat(field(t, "c")), ideal(field(t, "ideal"))});
  if (terms.empty()) throw Error("a germ needs at least one term");
  std::size_t n = j.contains("n") ? dim(j) : terms.front().ideal.dim();
  for (const auto& t : terms) check_length(t.ideal.dim(), n, "term ideal");
  return PshGerm(n, std::move(terms));
}

std::vector<MonomialIdeal> ideal_list(const json& j) {
  const json& list = j.is_array() ? j : array_field(j, "ideals");
  std::vector<MonomialIdeal> out;
  for (const auto& a : list) out.push_back(ideal(a));
  if (out.empty()) throw Error("expected at least one ideal");
  for (const auto& a : out) check_length(a.dim(), out.front().dim(), "ideal");
  return out;
}

Fan fan(const json& j) {
  std::size_t n = dim(j);
  std::vector<IntVec> rays;
  for (const auto& r : array_field(j, "rays")) {
    rays.push_back(int_vec(r));
    check_length(rays.back().size(), n, "ray");
  }
  std::vector<RayIndices> cones;
  for (const auto& c : array_field(j, "cones")) {
    if (!c.is_array()) throw Error("a cone is an array of ray indices");
    RayIndices idx;
    for (const auto& i : c) idx.push_back(index(i));
    cones.push_back(std::move(idx));
  }
  return Fan(n, std::move(rays), std::move(cones));
}

Polynomial polynomial(const json& j) {
  std::size_t n = dim(j);
  Polynomial f(n);
  for (const auto& t : array_field(j, "terms")) {
    IntVec e = int_vec(field(t, "exp"));
    check_length(e.size(), n, "exponent vector");
    for (auto x : e) {
      if (x < 0) throw Error("exponents must be nonnegative");
    }
    f.add_term(e, rat(field(t, "coef")));
  }
  return f;
}

ShiftedMonomialValuation valuation(const json& j, std::int64_t max_degree) {
  RatVec w = rat_vec(field(j, "weights"));
  std::size_t n = w.size();
  if (n == 0) throw Error("a valuation needs at least one weight");
  TriangularChange change = TriangularChange::identity(n);
  if (j.contains("shifts")) {
    std::vector<Polynomial> shifts;
    for (const auto& p : array_field(j, "shifts")) {
      if (p.is_object() && !p.contains("n")) {
        json q = p;
        q["n"] = n;
        shifts.push_back(polynomial(q));
      } else {
        shifts.push_back(polynomial(p));
      }
      check_length(shifts.back().dim(), n, "shift polynomial");
    }
    check_length(shifts.size(), n, "shifts");
    change = TriangularChange(std::move(shifts));
  }
  ShiftedMonomialValuation nu(std::move(change), std::move(w));
  nu.max_degree = max_degree;
  return nu;
}

json encode(const Rat& r) { return to_string(r); }

json encode(const Extended& r) { return r.str(); }

json encode(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json encode(const MonomialIdeal& a) { return json{{"generators", a.generators()}}; }

json encode(const NewtonRegion& p) {
  json gens = json::array();
  for (const auto& g : p.generators()) gens.push_back(encode(g));
  json facets = json::array();
  for (const auto& h : p.facets()) facets.push_back(json{{"normal", encode(h.normal)}, {"offset", encode(h.offset)}});
  return json{{"n", p.dim()}, {"generators", gens}, {"facets", facets}};
}

json encode(const AtomicMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms) atoms.push_back(json{{"weights", encode(a.valuation.weights)}, {"mass", encode(a.mass)}});
  return json{{"atoms", atoms}};
}

json encode(const DualComplex& d) {
  json vertices = json::array();
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    vertices.push_back(
        json{{"ray", d.vertices[i]}, {"b", d.b[i]}, {"weights", encode(d.vertex_valuation(i).weights)}});
  }
  return json{{"dim", d.dim}, {"vertices", vertices}, {"faces", d.faces}};
}

json encode(const CheckReport& r) {
  json instances = json::array();
  for (const auto& c : r.instances) {
    instances.push_back(json{{"label", c.label}, {"ok", c.ok}, {"witnesses", c.witnesses}, {"notes", c.notes}});
  }
  return json{{"suite", r.suite}, {"seed", r.seed}, {"ok", r.ok()}, {"instances", instances}};
}

}  // namespace valuix::io
