#include "dt4/series.hpp"

#include "dt4/error.hpp"

namespace dt4 {

CoefficientSeries::CoefficientSeries(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

CoefficientSeries CoefficientSeries::one(int order) {
  CoefficientSeries s(order);
  s[0] = 1;
  return s;
}

CoefficientSeries operator*(const CoefficientSeries& a, const CoefficientSeries& b) {
  const int n = std::min(a.order(), b.order());
  CoefficientSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

CoefficientSeries power(const CoefficientSeries& a, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative series power");
  CoefficientSeries out = CoefficientSeries::one(a.order());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

CoefficientSeries goettsche_series(int e, int n_max) {
  CoefficientSeries s = CoefficientSeries::one(n_max);
  const int reps = e < 0 ? -e : e;
  for (int k = 1; k <= n_max; ++k) {
    for (int r = 0; r < reps; ++r) {
      if (e > 0) {
        // multiply by 1/(1 - q^k)
        for (int n = k; n <= n_max; ++n) s[n] += s[n - k];
      } else {
        // multiply by (1 - q^k)
        for (int n = n_max; n >= k; --n) s[n] -= s[n - k];
      }
    }
  }
  return s;
}

std::vector<Integer> partition_numbers(int n_max) {
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be nonnegative");
  std::vector<Integer> p(static_cast<std::size_t>(n_max) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    Integer acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const int sign = (k % 2) ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(n - g1)];
      const int g2 = k * (3 * k + 1) / 2;
      if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p;
}

CoefficientSeries convolution_oracle(int e, int n_max) {
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "convolution oracle needs e >= 1");
  const auto p = partition_numbers(n_max);
  CoefficientSeries base(n_max);
  for (int n = 0; n <= n_max; ++n) base[n] = Rational(p[static_cast<std::size_t>(n)]);
  return power(base, e);
}

TStarValue reduced_dt4_tstar(long rank, long c1, long ch2, int euler) {
  if (rank < 1) throw Error(ErrorKind::InvalidArgument, "rank must be at least 1");
  if (rank >= 2) return {0, "rank >= 2: vanishes"};
  if (ch2 == 0) return {1, "c = (1, c1, 0): equals 1"};
  if (c1 == 0 && ch2 < 0) {
    const long n = -ch2;
    if (n > 100000) throw Error(ErrorKind::BoundExceeded, "n too large");
    const auto s = goettsche_series(euler, static_cast<int>(n));
    return {s[static_cast<int>(n)].get_num(), "c = (1, 0, -n): Euler characteristic of Hilb^n(S)"};
  }
  throw Error(ErrorKind::Unsupported, "rank 1 with c1 = " + std::to_string(c1) + " and ch2 = " + std::to_string(ch2) +
                                          " is not covered");
}

}  // namespace dt4
