#pragma once

#include <string>
#include <vector>

#include "dt4/rational.hpp"

namespace dt4 {

// Power series in q truncated after q^order.
class CoefficientSeries {
 public:
  explicit CoefficientSeries(int order);
  static CoefficientSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Rational& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  friend CoefficientSeries operator*(const CoefficientSeries& a, const CoefficientSeries& b);
  friend bool operator==(const CoefficientSeries&, const CoefficientSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

CoefficientSeries power(const CoefficientSeries& a, int k);

// prod_{k>=1} (1 - q^k)^{-e}, any integer e.
CoefficientSeries goettsche_series(int e, int n_max);

// p(0..n_max) from Euler's pentagonal-number recurrence.
std::vector<Integer> partition_numbers(int n_max);

// e-fold truncated power of sum_m p(m) q^m; e >= 1.
CoefficientSeries convolution_oracle(int e, int n_max);

// Case dispatch for reduced invariants of T*S on a surface with Euler
// number e_S, for the Chern character (r, c1, ch2) with ch2 = -n:
//   r >= 2               -> 0
//   r == 1, ch2 == 0     -> 1
//   r == 1, c1 == 0      -> coefficient of q^n in goettsche_series(e_S)
// Throws Error(Unsupported) for r == 1 with c1 and ch2 both nonzero (or
// ch2 > 0), Error(InvalidArgument) for r < 1.
struct TStarValue {
  Integer value;
  std::string rule;
};
TStarValue reduced_dt4_tstar(long rank, long c1, long ch2, int euler);

}  // namespace dt4
