#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dt4/rational.hpp"

namespace dt4 {

// Exponents of h_1..h_m.
using Monomial = std::vector<int>;

// Cohomology ring of P^{n_1} x ... x P^{n_m}: generators h_i of degree 1
// with h_i^{n_i+1} = 0.
class RingPresentation {
 public:
  explicit RingPresentation(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  int generators() const { return static_cast<int>(dims_.size()); }
  int dimension() const { return dimension_; }
  bool admissible(const Monomial& m) const;
  Monomial top_monomial() const { return dims_; }
  std::vector<Monomial> basis(int degree) const;

  friend bool operator==(const RingPresentation&, const RingPresentation&) = default;

 private:
  std::vector<int> dims_;
  int dimension_ = 0;
};

RingPresentation product_projective_ring(const std::vector<int>& dims);

class CohClass {
 public:
  explicit CohClass(RingPresentation ring) : ring_(std::move(ring)) {}
  static CohClass constant(const RingPresentation& ring, const Rational& c);
  static CohClass generator(const RingPresentation& ring, int i);
  // sum_i coeffs[i] * h_i
  static CohClass linear(const RingPresentation& ring, const std::vector<Rational>& coeffs);

  const RingPresentation& ring() const { return ring_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  void add_term(const Monomial& m, const Rational& c);

  CohClass degree_part(int k) const;
  CohClass truncated(int max_degree) const;
  // Multiplies the degree-k part by (-1)^k.
  CohClass graded_dual() const;

  CohClass& operator+=(const CohClass& other);
  CohClass& operator-=(const CohClass& other);
  CohClass& operator*=(const Rational& c);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(CohClass a, const Rational& c) { return a *= c; }
  friend CohClass operator*(const CohClass& a, const CohClass& b);
  friend bool operator==(const CohClass&, const CohClass&) = default;

  std::string to_string() const;

 private:
  RingPresentation ring_;
  std::map<Monomial, Rational> terms_;
};

CohClass power(const CohClass& a, int k);
// Evaluates sum_k coeffs[k] x^k at a nilpotent class x (constant part 0).
CohClass apply_series(const std::vector<Rational>& coeffs, const CohClass& x);
// Multiplicative inverse; throws Error(InvalidArgument) if the constant part is 0.
CohClass inverse(const CohClass& a);

// Coefficients of x/(1 - e^{-x}) up to x^max_degree.
std::vector<Rational> todd_series(int max_degree);
// Coefficients of e^x up to x^max_degree.
std::vector<Rational> exp_series(int max_degree);

// Chern character of a (virtual) sheaf; ch_k is the degree-k part.
class SheafClass {
 public:
  explicit SheafClass(CohClass ch) : ch_(std::move(ch)) {}

  const CohClass& ch() const { return ch_; }
  CohClass component(int k) const { return ch_.degree_part(k); }
  Rational rank() const { return ch_.constant_term(); }
  SheafClass dual() const { return SheafClass(ch_.graded_dual()); }

  friend SheafClass operator+(const SheafClass& a, const SheafClass& b) { return SheafClass(a.ch_ + b.ch_); }
  friend SheafClass operator-(const SheafClass& a, const SheafClass& b) { return SheafClass(a.ch_ - b.ch_); }
  // Tensor product.
  friend SheafClass operator*(const SheafClass& a, const SheafClass& b) { return SheafClass(a.ch_ * b.ch_); }
  friend bool operator==(const SheafClass&, const SheafClass&) = default;

 private:
  CohClass ch_;
};

SheafClass ch_line(const CohClass& divisor);
SheafClass structure_sheaf(const RingPresentation& ring);

// Total Chern class 1 + c_1 + ... + c_k as a list c_0..c_k (c_0 = 1), and
// conversions to and from the Chern character through Newton's identities.
SheafClass chern_to_ch(const Rational& rank, const std::vector<CohClass>& chern);
std::vector<CohClass> ch_to_chern(const SheafClass& sheaf);
// c_1..c_k read off a total Chern class (product of factors, say).
std::vector<CohClass> chern_components(const CohClass& total);

// 1 + c1/2 + (c1^2 + c2)/12 + c1 c2/24 + (-c1^4 + 4 c1^2 c2 + c1 c3 + 3 c2^2 - c4)/720.
CohClass todd_from_chern(const CohClass& c1, const CohClass& c2, const CohClass& c3, const CohClass& c4);

// A smooth projective variety: a product of projective spaces, or a smooth
// hypersurface D in one. Hypersurface integrals are taken on the ambient
// ring against D; only classes restricted from the ambient are represented.
class VarietyContext {
 public:
  static VarietyContext product_projective(const std::vector<int>& dims);
  static VarietyContext hypersurface(const std::vector<int>& dims, const std::vector<int>& bidegree);

  const RingPresentation& ambient() const { return ambient_; }
  const std::optional<CohClass>& divisor() const { return divisor_; }
  int dimension() const { return dimension_; }
  const CohClass& tangent_ch() const { return tangent_ch_; }
  const CohClass& todd() const { return todd_; }
  // c_0..c_dim of the tangent bundle.
  std::vector<CohClass> tangent_chern() const;
  SheafClass cotangent() const;
  const std::vector<int>& divisor_degrees() const { return divisor_degrees_; }

  // sum_i coeffs[i] h_i.
  CohClass line_class(const std::vector<int>& coeffs) const;

 private:
  VarietyContext(RingPresentation ambient, std::optional<CohClass> divisor, std::vector<int> degrees,
                 int dimension, CohClass tangent_ch, CohClass todd);

  RingPresentation ambient_;
  std::optional<CohClass> divisor_;
  std::vector<int> divisor_degrees_;
  int dimension_;
  CohClass tangent_ch_;
  CohClass todd_;
};

Rational integrate(const VarietyContext& ctx, const CohClass& alpha);
// Topological Euler number: the integral of c_top(T_X).
Rational euler_characteristic(const VarietyContext& ctx);

// chi(E, F) = int ch(E^dual) ch(F) td(X).
Rational chi_pair(const VarietyContext& ctx, const SheafClass& e, const SheafClass& f);

struct LiQinCase {
  int eps1 = 0;
  int eps2 = 0;
  Integer chi;
  Integer k;              // (2 - chi) / 2
  Integer binomial_form;  // (1 + eps1) * C(6 - eps2, 4), reported alongside k
};

VarietyContext liqin_fourfold();
SheafClass liqin_sheaf(const VarietyContext& x, int eps1, int eps2);
// Throws Error(InvalidArgument) for eps outside {0,1}, and
// Error(InternalInconsistency) if 2 - chi is odd.
LiQinCase liqin_case(int eps1, int eps2);

// chi(I, I) for the ideal sheaf of n points on a compact CY four-fold with
// h^{0,2} = h02 (0 for SU(4), 1 for Sp(2) holonomy).
Integer chi_ideal_cy4(int n, int h02);
// 2 - chi(I, I) = 2n - h02.
int vdim_ideal_cy4(int n, int h02);

struct SurfaceIdentity {
  Rational lhs;  // -chi(F, F (x) Omega^1)
  Rational rhs;  // -2 chi(F, F) + r^2 e(S)
  bool equal = false;
};

SurfaceIdentity surface_obstruction_identity(const VarietyContext& surface, const SheafClass& f);

// On P^2: ch = (ch0, ch1 * h, ch2 * h^2).
SheafClass projective_plane_sheaf(const VarietyContext& p2, const Rational& ch0, const Rational& ch1,
                                  const Rational& ch2);

}  // namespace dt4
