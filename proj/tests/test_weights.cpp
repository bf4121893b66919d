#include <doctest.h>

#include <random>

#include "dt4/error.hpp"
#include "dt4/weights.hpp"

using namespace dt4;

namespace {

TorusPoint point(long a, long b, long c, long d) {
  return TorusPoint({Rational(a), Rational(b), Rational(c), Rational(d)});
}

}  // namespace

TEST_CASE("weight_of examples") {
  CHECK(weight_of({1, 0, 0, 0}) == LinForm::s(1));
  CHECK(weight_of({1, 1, 1, 1}).is_zero());
  CHECK(weight_of({0, 0, 0, -1}) == -LinForm::s(4));
  CHECK(weight_of({0, 0, 0, -1}) == LinForm::s(1) + LinForm::s(2) + LinForm::s(3));
  CHECK((LinForm::s(1) + LinForm::s(2) + LinForm::s(3) + LinForm::s(4)).is_zero());
}

TEST_CASE("weight_of is additive and vanishes exactly on the CY relation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const ExpVec e{d(rng), d(rng), d(rng), d(rng)};
    const ExpVec f{d(rng), d(rng), d(rng), d(rng)};
    CHECK(weight_of(e + f) == weight_of(e) + weight_of(f));
    const bool trivial = cy_reduce(Laurent::monomial(e)) == Laurent::constant(1);
    CHECK(weight_of(e).is_zero() == trivial);
  }
  CHECK(weight_of({2, 2, 2, 2}).is_zero());
}

TEST_CASE("LinForm printing and evaluation") {
  const LinForm w = LinForm::s(1) + LinForm::s(2);
  CHECK(w.to_string() == "s1+s2");
  CHECK((-w).to_string() == "-s1-s2");
  CHECK(LinForm::s(4).to_string() == "-s1-s2-s3");
  CHECK(LinForm::s(4).evaluate(point(1, 2, 3, -6)) == -6);
  CHECK(w.leading_sign() == 1);
  CHECK(LinForm::s(4).leading_sign() == -1);
}

TEST_CASE("TorusPoint enforces the CY relation") {
  CHECK_THROWS_AS(point(1, 2, 3, 4), Error);
  CHECK_NOTHROW(point(1, 2, 3, -6));
}

TEST_CASE("fwp_eval examples") {
  const TorusPoint s = point(1, 2, 3, -6);
  FactoredWeightProduct p;
  p.multiply(LinForm::s(1) + LinForm::s(2));
  CHECK(fwp_eval(p, s) == 3);

  FactoredWeightProduct q;
  for (int i = 1; i <= 4; ++i) q.multiply(LinForm::s(i));
  CHECK(fwp_eval(q, s) == -36);

  CHECK(fwp_eval(FactoredWeightProduct::zero(), s) == 0);
}

TEST_CASE("a weight and its negative cancel at the factor level") {
  FactoredWeightProduct p;
  const LinForm w = LinForm::s(1) - LinForm::s(3);
  p.multiply(w, 2);
  p.multiply(-w, -1);
  REQUIRE(p.factors().size() == 1);
  CHECK(p.factors().begin()->second == 1);
  CHECK(p.sign() == -1);  // w^2 / (-w) = -w
  CHECK(fwp_eval(p, point(1, 2, 3, -6)) == 2);
  p.multiply(w, -1);
  CHECK(p.factors().empty());
  CHECK(fwp_eval(p, point(1, 2, 3, -6)) == -1);
}

TEST_CASE("vanishing factors") {
  const TorusPoint s = point(1, 2, 3, -6);
  const LinForm w = LinForm::s(1) + LinForm::s(2) - LinForm::s(3);  // 0 at s
  FactoredWeightProduct numerator;
  numerator.multiply(w);
  numerator.multiply(LinForm::s(1), -1);
  CHECK(fwp_eval(numerator, s) == 0);

  FactoredWeightProduct denominator;
  denominator.multiply(w, -1);
  CHECK_THROWS_WITH_AS(fwp_eval(denominator, s), doctest::Contains("s1+s2-s3"), Error);

  FactoredWeightProduct zero_weight;
  zero_weight.multiply(LinForm{});
  CHECK(zero_weight.is_zero());
  CHECK_THROWS_AS(zero_weight.multiply(LinForm{}, -1), Error);
}

TEST_CASE("evaluation matches the product of evaluated factors") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-3, 3);
  const TorusPoint s = point(1, 10, 100, -111);
  for (int trial = 0; trial < 100; ++trial) {
    FactoredWeightProduct p;
    Rational direct = 1;
    for (int k = 0; k < 4; ++k) {
      const LinForm w({c(rng), c(rng), c(rng), c(rng)});
      if (w.is_zero()) continue;
      const int e = (k % 2) ? -1 : 2;
      p.multiply(w, e);
      direct *= e > 0 ? Rational(w.evaluate(s) * w.evaluate(s)) : Rational(1 / w.evaluate(s));
    }
    CHECK(fwp_eval(p, s) == direct);
  }
}

TEST_CASE("WeightMultiset from characters") {
  Laurent ch;
  ch.add_term({-1, 0, 0, 0}, 1);
  ch.add_term({0, 0, 0, 1}, 2);
  const auto w = WeightMultiset::from_character(ch);
  CHECK(w.size() == 3);
  CHECK(w.multiplicity(LinForm::s(4)) == 2);
  CHECK_FALSE(w.is_self_dual());
  CHECK(w.dual().multiplicity(-LinForm::s(4)) == 2);

  Laurent bad;
  bad.add_term({1, 0, 0, 0}, -1);
  CHECK_THROWS_AS(WeightMultiset::from_character(bad), Error);
  Laurent half;
  half.add_term({1, 0, 0, 0}, make_rational(1, 2));
  CHECK_THROWS_AS(WeightMultiset::from_character(half), Error);
}

TEST_CASE("symbolic identity prod_j (s1 + sj) = e3 under s1+s2+s3+s4 = 0") {
  FactoredWeightProduct p;
  for (int j = 2; j <= 4; ++j) p.multiply(LinForm::s(1) + LinForm::s(j));
  CHECK(expand_polynomial(p) == elementary_symmetric_reduced(3));
  // e1 vanishes identically on the subtorus.
  CHECK(elementary_symmetric_reduced(1).is_zero());
  // e3 at (1,2,3,-6) is -60.
  CHECK(elementary_symmetric_reduced(3).evaluate({Rational(1), Rational(2), Rational(3), Rational(1)}) == -60);
}
