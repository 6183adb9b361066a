#include "valuix/valuation.hpp"

#include <algorithm>
#include <numeric>

namespace valuix {

namespace {

std::int64_t degree_of(const IntVec& a) { return std::accumulate(a.begin(), a.end(), std::int64_t{0}); }

void check_degree(const Polynomial& p, std::int64_t cap) {
  if (p.total_degree() > cap)
    throw Error("polynomial rewriting exceeded the total degree cap of " + std::to_string(cap));
}

Polynomial multiply_capped(const Polynomial& a, const Polynomial& b, std::int64_t cap) {
  Polynomial out = a * b;
  check_degree(out, cap);
  return out;
}

// p(xs) for polynomials xs in a common ring, with intermediate degree cap.
Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& xs, std::int64_t cap) {
  const std::size_t m = xs[0].dim();
  Polynomial out(m);
  std::vector<std::vector<Polynomial>> powers(xs.size());
  for (const auto& [alpha, coef] : p.terms()) {
    Polynomial term = Polynomial::constant(m, coef);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Polynomial::constant(m, 1));
      while (static_cast<std::int64_t>(pw.size()) <= alpha[i])
        pw.push_back(multiply_capped(pw.back(), xs[i], cap));
      if (alpha[i] > 0) term = multiply_capped(term, pw[alpha[i]], cap);
    }
    out += term;
  }
  return out;
}

Rat min_weight(const RatVec& w) { return *std::min_element(w.begin(), w.end()); }

void check_weights(const RatVec& w) {
  if (w.empty()) throw Error("valuation: empty weight vector");
  if (!all_positive(w)) throw Error("valuation: weights must be positive");
}

}  // namespace

Polynomial Polynomial::monomial(const IntVec& exponent, const Rat& coef) {
  Polynomial p(exponent.size());
  p.add_term(exponent, coef);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
  IntVec e(n, 0);
  e.at(i) = 1;
  return monomial(e);
}

Polynomial Polynomial::constant(std::size_t n, const Rat& c) { return monomial(IntVec(n, 0), c); }

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = 0;
  for (const auto& [alpha, coef] : terms_) d = std::max(d, degree_of(alpha));
  return d;
}

void Polynomial::add_term(const IntVec& exponent, const Rat& coef) {
  if (exponent.size() != dim_) throw Error("polynomial: dimension mismatch");
  for (auto e : exponent)
    if (e < 0) throw Error("polynomial: negative exponent");
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponent, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::truncation(const IntVec& beta) const {
  if (beta.size() != dim_) throw Error("truncation: dimension mismatch");
  Polynomial out(dim_);
  for (const auto& [alpha, coef] : terms_) {
    bool ge = true;
    for (std::size_t i = 0; i < dim_ && ge; ++i) ge = alpha[i] >= beta[i];
    if (ge) out.terms_.emplace(alpha, coef);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.dim_ != dim_) throw Error("polynomial sum: dimension mismatch");
  for (const auto& [alpha, coef] : other.terms_) add_term(alpha, coef);
  return *this;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  if (b.dim() != a.dim()) throw Error("polynomial difference: dimension mismatch");
  for (const auto& [alpha, coef] : b.terms()) out.add_term(alpha, -coef);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim() != b.dim()) throw Error("polynomial product: dimension mismatch");
  Polynomial out(a.dim());
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      IntVec s(x);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += y[i];
      out.add_term(s, cx * cy);
    }
  return out;
}

TriangularChange TriangularChange::identity(std::size_t n) {
  return TriangularChange(std::vector<Polynomial>(n, Polynomial(n)));
}

TriangularChange::TriangularChange(std::vector<Polynomial> shifts) : shifts_(std::move(shifts)) {
  const std::size_t n = shifts_.size();
  if (n == 0) throw Error("triangular change: dimension must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    if (shifts_[i].dim() != n) throw Error("triangular change: dimension mismatch");
    for (const auto& [alpha, coef] : shifts_[i].terms()) {
      if (degree_of(alpha) == 0) throw Error("triangular change: shift must vanish at 0");
      for (std::size_t j = i; j < n; ++j)
        if (alpha[j] != 0)
          throw Error("triangular change: shift " + std::to_string(i + 1) +
                      " may only involve earlier variables");
    }
  }
}

bool TriangularChange::is_identity() const {
  return std::all_of(shifts_.begin(), shifts_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial TriangularChange::rewrite(const Polynomial& f, std::int64_t max_degree) const {
  const std::size_t n = dim();
  if (f.dim() != n) throw Error("rewrite: dimension mismatch");
  if (is_identity()) return f;
  // x_i = z_i + p_i(x_1..x_{i-1}), each x_j already expressed in z.
  std::vector<Polynomial> xs;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial xi = Polynomial::variable(n, i);
    if (!shifts_[i].is_zero()) {
      std::vector<Polynomial> args = xs;
      while (args.size() < n) args.push_back(Polynomial(n));
      xi += compose(shifts_[i], args, max_degree);
    }
    xs.push_back(std::move(xi));
  }
  return compose(f, xs, max_degree);
}

MonomialValuation::MonomialValuation(RatVec w) : weights(std::move(w)) { check_weights(weights); }

bool MonomialValuation::is_normalized() const { return min_weight(weights) == 1; }

ShiftedMonomialValuation::ShiftedMonomialValuation(TriangularChange c, RatVec w)
    : change(std::move(c)), weights(std::move(w)) {
  check_weights(weights);
  if (weights.size() != change.dim()) throw Error("shifted valuation: dimension mismatch");
}

ShiftedMonomialValuation::ShiftedMonomialValuation(const MonomialValuation& v)
    : change(TriangularChange::identity(v.dim())), weights(v.weights) {}

Extended eval_poly(const MonomialValuation& nu, const Polynomial& f) {
  if (f.dim() != nu.dim()) throw Error("eval_poly: dimension mismatch");
  if (f.is_zero()) return Extended::infinity();
  Rat best;
  bool first = true;
  for (const auto& [alpha, coef] : f.terms()) {
    Rat v = dot(nu.weights, alpha);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

Extended eval_poly(const ShiftedMonomialValuation& nu, const Polynomial& f) {
  if (f.dim() != nu.dim()) throw Error("eval_poly: dimension mismatch");
  return eval_poly(MonomialValuation(nu.weights), nu.change.rewrite(f, nu.max_degree));
}

Rat eval_ideal(const MonomialValuation& nu, const MonomialIdeal& a) {
  if (a.dim() != nu.dim()) throw Error("eval_ideal: dimension mismatch");
  Rat best = dot(nu.weights, a.generators()[0]);
  for (const auto& g : a.generators()) best = std::min(best, dot(nu.weights, g));
  return best;
}

Rat eval_ideal(const MonomialValuation& nu, const NewtonRegion& p) {
  if (p.dim() != nu.dim()) throw Error("eval_ideal: dimension mismatch");
  return p.support_value(nu.weights);
}

Rat eval_ideal(const ShiftedMonomialValuation& nu, const std::vector<Polynomial>& generators) {
  Extended best = Extended::infinity();
  for (const auto& g : generators) best = std::min(best, eval_poly(nu, g));
  if (best.is_infinite()) throw Error("eval_ideal: zero ideal");
  return best.value();
}

Normalized normalize(const MonomialValuation& nu) {
  Rat lambda = min_weight(nu.weights);
  return {MonomialValuation(scaled(nu.weights, 1 / lambda)), lambda};
}

std::int64_t b_value(const IntVec& primitive_ray) {
  if (primitive_ray.empty()) throw Error("b_value: empty ray");
  return *std::min_element(primitive_ray.begin(), primitive_ray.end());
}

std::int64_t b_value(const MonomialValuation& nu) { return b_value(primitive(nu.weights)); }

Rat thinness(const MonomialValuation& nu) {
  return std::accumulate(nu.weights.begin(), nu.weights.end(), Rat(0));
}

Rat thinness(const ShiftedMonomialValuation& nu) { return thinness(MonomialValuation(nu.weights)); }

Rat kiselman(const PshGerm& u, const RatVec& w) {
  if (w.size() != u.dim()) throw Error("kiselman: dimension mismatch");
  MonomialValuation nu(w);
  Rat total = 0;
  for (const auto& t : u.terms()) total += t.c * eval_ideal(nu, t.ideal);
  return total;
}

MonomialValuation monomial_retraction(const ShiftedMonomialValuation& nu) {
  RatVec w;
  for (std::size_t i = 0; i < nu.dim(); ++i)
    w.push_back(eval_poly(nu, Polynomial::variable(nu.dim(), i)).value());
  return MonomialValuation(std::move(w));
}

MonomialValuation monomial_retraction(const MonomialValuation& nu) { return nu; }

namespace {

// (beta, nu(T_beta f)) for every beta below some exponent of f.
std::vector<std::pair<IntVec, Rat>> truncation_values(const ShiftedMonomialValuation& nu,
                                                      const Polynomial& f) {
  if (f.dim() != nu.dim()) throw Error("homotopy: dimension mismatch");
  if (f.is_zero()) throw Error("homotopy: f must be nonzero");
  const std::size_t n = f.dim();
  std::vector<IntVec> betas;
  for (const auto& [alpha, coef] : f.terms()) {
    IntVec b(n, 0);
    while (true) {
      betas.push_back(b);
      std::size_t i = 0;
      while (i < n && ++b[i] > alpha[i]) b[i++] = 0;
      if (i == n) break;
    }
  }
  std::sort(betas.begin(), betas.end());
  betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
  std::vector<std::pair<IntVec, Rat>> out;
  for (const auto& b : betas) out.emplace_back(b, eval_poly(nu, f.truncation(b)).value());
  return out;
}

}  // namespace

Rat homotopy_eval(const ShiftedMonomialValuation& nu, const Polynomial& f, const Rat& s) {
  if (s < 0) throw Error("homotopy: s must be >= 0");
  auto values = truncation_values(nu, f);
  Rat best = values[0].second;  // beta = 0
  for (const auto& [b, v] : values) best = std::min(best, v + Rat(degree_of(b)) * s);
  return best;
}

Rat homotopy_eval(const MonomialValuation& nu, const Polynomial& f, const Rat& s) {
  return homotopy_eval(ShiftedMonomialValuation(nu), f, s);
}

Rat homotopy_threshold(const ShiftedMonomialValuation& nu, const Polynomial& f) {
  auto values = truncation_values(nu, f);
  const Rat c0 = values[0].second;
  Rat threshold = 0;
  for (const auto& [b, v] : values)
    if (v < c0) threshold = std::max(threshold, (c0 - v) / Rat(degree_of(b)));
  return threshold;
}

Rat izumi_constant(const RatVec& w) {
  check_weights(w);
  return *std::max_element(w.begin(), w.end()) / min_weight(w);
}

}  // namespace valuix
