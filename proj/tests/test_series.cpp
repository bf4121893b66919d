#include <doctest.h>

#include "dt4/error.hpp"
#include "dt4/series.hpp"

using namespace dt4;

namespace {

std::vector<Rational> head(const CoefficientSeries& s, int n) {
  return {s.coefficients().begin(), s.coefficients().begin() + n + 1};
}

std::vector<Rational> rationals(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("Goettsche series values") {
  CHECK(goettsche_series(0, 10) == CoefficientSeries::one(10));
  CHECK(head(goettsche_series(1, 10), 10) == rationals({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
  CHECK(goettsche_series(1, 50)[50] == 204226);
  CHECK(head(goettsche_series(3, 4), 4) == rationals({1, 3, 9, 22, 51}));
  CHECK(goettsche_series(2, 2)[2] == 5);
  // 1/eta^24 without the q^-1
  CHECK(head(goettsche_series(24, 5), 5) == rationals({1, 24, 324, 3200, 25650, 176256}));
}

TEST_CASE("negative exponent gives the Euler function") {
  const auto euler = goettsche_series(-1, 40);
  for (int n = 0; n <= 40; ++n) {
    long expected = 0;
    for (int k = -6; k <= 6; ++k)
      if (k * (3 * k - 1) / 2 == n) expected = (k % 2) ? -1 : 1;
    CHECK(euler[n] == expected);
  }
}

TEST_CASE("agreement with the convolution oracle") {
  for (int e = 1; e <= 5; ++e) CHECK(goettsche_series(e, 20) == convolution_oracle(e, 20));
}

TEST_CASE("multiplicativity, integrality and leading terms") {
  for (int a = -2; a <= 3; ++a)
    for (int b = -2; b <= 3; ++b) CHECK(goettsche_series(a + b, 15) == goettsche_series(a, 15) * goettsche_series(b, 15));
  for (int e = 0; e <= 6; ++e) {
    const auto s = goettsche_series(e, 20);
    CHECK(s[0] == 1);
    CHECK(s[1] == e);
    for (const auto& c : s.coefficients()) {
      CHECK(c >= 0);
      CHECK(c.get_den() == 1);
    }
  }
  CHECK(power(goettsche_series(1, 10), 3) == goettsche_series(3, 10));
}

TEST_CASE("partition numbers") {
  const auto p = partition_numbers(100);
  CHECK(p[0] == 1);
  CHECK(p[10] == 42);
  CHECK(p[100] == Integer("190569292"));
}

TEST_CASE("reduced invariants of T*S") {
  CHECK(reduced_dt4_tstar(1, 0, -4, 3).value == 51);
  CHECK(reduced_dt4_tstar(2, 1, 0, 3).value == 0);
  CHECK(reduced_dt4_tstar(3, 0, -7, 24).value == 0);
  CHECK(reduced_dt4_tstar(1, 5, 0, 3).value == 1);
  CHECK(reduced_dt4_tstar(1, 0, 0, 3).value == 1);
  CHECK(reduced_dt4_tstar(1, 0, -1, 24).value == 24);
  try {
    reduced_dt4_tstar(1, 2, -3, 3);
    FAIL("expected Unsupported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
  }
  CHECK_THROWS_AS(reduced_dt4_tstar(0, 0, 0, 3), Error);
}
