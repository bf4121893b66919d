#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "dt4/laurent.hpp"
#include "dt4/rational.hpp"

namespace dt4 {

// A point (s1, s2, s3, s4) of the Calabi-Yau subtorus Lie algebra.
class TorusPoint {
 public:
  // Throws Error(InvalidArgument) unless s1 + s2 + s3 + s4 = 0.
  explicit TorusPoint(std::array<Rational, 4> s);

  const std::array<Rational, 4>& values() const { return s_; }
  const Rational& operator[](std::size_t i) const { return s_[i]; }
  std::string to_string() const;

 private:
  std::array<Rational, 4> s_;
};

// a1 s1 + a2 s2 + a3 s3 + a4 s4 modulo s1 + s2 + s3 + s4 = 0. Stored in
// reduced form (a4 = 0), so equality and ordering are on the reduced triple.
class LinForm {
 public:
  LinForm() = default;
  explicit LinForm(const std::array<int, 4>& coefficients);

  static LinForm s(int i);  // s_i for i in 1..4

  std::array<int, 3> reduced() const { return reduced_; }
  bool is_zero() const { return reduced_ == std::array<int, 3>{0, 0, 0}; }
  // +1/-1 according to the first nonzero reduced coefficient; 0 for zero.
  int leading_sign() const;

  Rational evaluate(const TorusPoint& s) const;

  LinForm operator-() const;
  friend LinForm operator+(const LinForm& a, const LinForm& b);
  friend LinForm operator-(const LinForm& a, const LinForm& b) { return a + (-b); }
  friend auto operator<=>(const LinForm&, const LinForm&) = default;

  // Permute the equivariant parameters: s_i -> s_{perm[i]} (0-based).
  LinForm permuted(const std::array<int, 4>& perm) const;

  // "s1+s2-2*s3", "0" for zero.
  std::string to_string() const;

 private:
  std::array<int, 3> reduced_{0, 0, 0};
};

LinForm weight_of(const ExpVec& e);

// Weight multiset with positive multiplicities (an effective representation).
class WeightMultiset {
 public:
  using Map = std::map<LinForm, int>;

  WeightMultiset() = default;
  // Converts a character to weights; each monomial t^e becomes weight_of(e).
  // Throws Error(NotEffective) when a merged coefficient is not a positive
  // integer.
  static WeightMultiset from_character(const Laurent& character);

  void add(const LinForm& w, int multiplicity = 1);

  const Map& weights() const { return weights_; }
  int size() const;  // with multiplicity
  int multiplicity(const LinForm& w) const;
  bool contains_zero() const;
  bool is_self_dual() const;
  // Character with one monomial per weight, exponent = reduced form (t4^0).
  Laurent to_character() const;
  WeightMultiset dual() const;
  WeightMultiset permuted(const std::array<int, 4>& perm) const;

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

 private:
  Map weights_;
};

// Product of linear weight forms with integer exponents, kept factored.
// Factors are normalized to leading_sign() > 0, with the sign absorbed, so a
// weight and its negative always share one slot and cancel exactly.
class FactoredWeightProduct {
 public:
  FactoredWeightProduct() = default;
  static FactoredWeightProduct zero();

  // Multiplies by w^exponent. A zero w with positive exponent flags the
  // whole product as zero; a zero w with negative exponent throws
  // Error(InternalInconsistency).
  void multiply(const LinForm& w, int exponent = 1);
  void multiply(const FactoredWeightProduct& other);
  void scale(const Rational& c);
  void negate() { sign_ = -sign_; }

  bool is_zero() const { return zero_; }
  int sign() const { return sign_; }
  const Rational& scalar() const { return scalar_; }
  const std::map<LinForm, int>& factors() const { return factors_; }
  int degree() const;

  // A vanishing numerator factor gives 0; a vanishing denominator factor
  // throws Error(NonGenericParameters) naming it.
  Rational evaluate(const TorusPoint& s) const;

  std::string to_string() const;

 private:
  std::map<LinForm, int> factors_;
  Rational scalar_ = 1;
  int sign_ = 1;
  bool zero_ = false;
};

Rational fwp_eval(const FactoredWeightProduct& p, const TorusPoint& s);

// Symbolic helpers: polynomials in the reduced variables s1, s2, s3 encoded
// as Laurent polynomials whose first three exponents are the s-degrees.
Laurent linform_polynomial(const LinForm& w);
// Expands a product with nonnegative exponents; throws Error(InvalidArgument)
// on negative exponents.
Laurent expand_polynomial(const FactoredWeightProduct& p);
// Elementary symmetric polynomial e_k(s1..s4) restricted to s4 = -s1-s2-s3.
Laurent elementary_symmetric_reduced(int k);

}  // namespace dt4
