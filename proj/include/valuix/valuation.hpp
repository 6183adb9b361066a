#pragma once

// Computable points of the valuation space: monomial valuations and
// monomial valuations in triangular coordinates z_1 = x_1,
// z_i = x_i - p_i(x_1, ..., x_{i-1}).

#include <map>
#include <vector>

#include "valuix/divisors.hpp"
#include "valuix/rational.hpp"

namespace valuix {

/// Sparse polynomial with rational coefficients; no zero coefficients stored.
class Polynomial {
 public:
  explicit Polynomial(std::size_t n) : dim_(n) {}
  static Polynomial monomial(const IntVec& exponent, const Rat& coef = 1);
  static Polynomial variable(std::size_t n, std::size_t i);
  static Polynomial constant(std::size_t n, const Rat& c);

  std::size_t dim() const { return dim_; }
  const std::map<IntVec, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t total_degree() const;

  void add_term(const IntVec& exponent, const Rat& coef);

  /// sum_{alpha >= beta} a_alpha x^alpha.
  Polynomial truncation(const IntVec& beta) const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t dim_;
  std::map<IntVec, Rat> terms_;
};

/// Default cap on total degree produced while rewriting into z-coordinates.
inline constexpr std::int64_t kDefaultMaxDegree = 64;

/// Substitutions z_i = x_i - p_i(x_1..x_{i-1}) with p_i(0) = 0; p_1 = 0.
/// Triangular with unit diagonal, hence an automorphism fixing 0 with
/// Jacobian determinant 1.
class TriangularChange {
 public:
  static TriangularChange identity(std::size_t n);
  /// `shifts[i]` is p_i; it may only involve x_1..x_{i-1}.
  explicit TriangularChange(std::vector<Polynomial> shifts);

  std::size_t dim() const { return shifts_.size(); }
  const std::vector<Polynomial>& shifts() const { return shifts_; }
  bool is_identity() const;

  /// f(x) rewritten as a polynomial in z. Throws when an intermediate total
  /// degree exceeds `max_degree`.
  Polynomial rewrite(const Polynomial& f, std::int64_t max_degree = kDefaultMaxDegree) const;

 private:
  std::vector<Polynomial> shifts_;
};

struct MonomialValuation {
  RatVec weights;  // all > 0

  explicit MonomialValuation(RatVec w);
  /// nu_m: all weights 1.
  static MonomialValuation order(std::size_t n) { return MonomialValuation(RatVec(n, Rat(1))); }

  std::size_t dim() const { return weights.size(); }
  bool is_normalized() const;
  friend bool operator==(const MonomialValuation&, const MonomialValuation&) = default;
};

struct ShiftedMonomialValuation {
  TriangularChange change;
  RatVec weights;  // weights of z_1..z_n, all > 0
  std::int64_t max_degree = kDefaultMaxDegree;

  ShiftedMonomialValuation(TriangularChange c, RatVec w);
  explicit ShiftedMonomialValuation(const MonomialValuation& v);
  std::size_t dim() const { return weights.size(); }
};

Extended eval_poly(const MonomialValuation& nu, const Polynomial& f);
Extended eval_poly(const ShiftedMonomialValuation& nu, const Polynomial& f);

Rat eval_ideal(const MonomialValuation& nu, const MonomialIdeal& a);
Rat eval_ideal(const MonomialValuation& nu, const NewtonRegion& p);
/// Shifted valuation on an ideal given by an explicit generator list.
Rat eval_ideal(const ShiftedMonomialValuation& nu, const std::vector<Polynomial>& generators);

struct Normalized {
  MonomialValuation valuation;
  Rat factor;  // the original nu(m) = min_i w_i
};
Normalized normalize(const MonomialValuation& nu);

/// b = min_i e_i for the primitive integral rescaling e of the weights.
std::int64_t b_value(const IntVec& primitive_ray);
std::int64_t b_value(const MonomialValuation& nu);

/// A(nu) = sum of the weights in the coordinates where nu is monomial.
Rat thinness(const MonomialValuation& nu);
Rat thinness(const ShiftedMonomialValuation& nu);

/// Kiselman number of u with weight w: sum_i c_i nu_w(a_i) = -u-hat(nu_w).
Rat kiselman(const PshGerm& u, const RatVec& w);

/// r(nu): the monomial valuation with weights nu(x_1), ..., nu(x_n).
MonomialValuation monomial_retraction(const ShiftedMonomialValuation& nu);
MonomialValuation monomial_retraction(const MonomialValuation& nu);

/// h_s(nu)(f) = min_beta nu(T_beta f) + |beta| s, with s = -log t >= 0.
Rat homotopy_eval(const ShiftedMonomialValuation& nu, const Polynomial& f, const Rat& s);
Rat homotopy_eval(const MonomialValuation& nu, const Polynomial& f, const Rat& s);

/// Least s with h_s(nu)(f) = nu(f); zero when already stable at s = 0.
Rat homotopy_threshold(const ShiftedMonomialValuation& nu, const Polynomial& f);

/// C = max_i w_i / min_i w_i; for normalized w this is max_i w_i, and
/// C g(nu_m) <= g(nu_w) <= g(nu_m) for every toric formal psh g.
Rat izumi_constant(const RatVec& w);

}  // namespace valuix
