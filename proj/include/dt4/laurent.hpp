#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "dt4/rational.hpp"

namespace dt4 {

// Exponent vector of a monomial t1^e1 t2^e2 t3^e3 t4^e4.
using ExpVec = std::array<int, 4>;

ExpVec operator+(const ExpVec& a, const ExpVec& b);
ExpVec operator-(const ExpVec& a, const ExpVec& b);
ExpVec operator-(const ExpVec& a);

inline constexpr ExpVec kKappa{1, 1, 1, 1};

// Unit vector e_i, i in 0..3.
ExpVec unit_exp(int i);

// Finite Laurent polynomial in t1..t4 with exact rational coefficients.
// Terms are kept in lexicographic ExpVec order and never store zeros.
class Laurent {
 public:
  using Terms = std::map<ExpVec, Rational>;

  Laurent() = default;
  static Laurent monomial(const ExpVec& e, const Rational& c = 1);
  static Laurent constant(const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const ExpVec& e) const;

  void add_term(const ExpVec& e, const Rational& c);

  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent& operator*=(const Rational& c);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a) { return a *= Rational(-1); }
  friend Laurent operator*(Laurent a, const Rational& c) { return a *= c; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) = default;

  // Sum of coefficients, i.e. the value at t = (1,1,1,1).
  Rational value_at_one() const;
  // Value at a point with all coordinates nonzero.
  Rational evaluate(const std::array<Rational, 4>& t) const;

  // "1 + t1 - 2*t2^-1*t3"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  Terms terms_;
};

Laurent laurent_mul(const Laurent& a, const Laurent& b);

// t^e -> t^-e.
Laurent laurent_bar(const Laurent& a);

// Restriction to t1 t2 t3 t4 = 1: t4 is replaced by (t1 t2 t3)^-1.
Laurent cy_reduce(const Laurent& a);
ExpVec cy_reduce(const ExpVec& e);

// prod_i (1 - t_i^-1).
Laurent koszul_factor_dual();

}  // namespace dt4
