#include <doctest.h>

#include <algorithm>

#include "dt4/error.hpp"
#include "dt4/vertex.hpp"

using namespace dt4;

namespace {

TorusParams at(long a, long b, long c) { return TorusParams::parse(std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(-a - b - c)); }

Rational e_sym(const TorusPoint& s, int k) {
  Rational total = 0;
  for (int mask = 0; mask < 16; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != k) continue;
    Rational term = 1;
    for (int i = 0; i < 4; ++i)
      if (mask & (1 << i)) term *= s[static_cast<std::size_t>(i)];
    total += term;
  }
  return total;
}

std::vector<std::array<int, 4>> all_perms() {
  std::vector<std::array<int, 4>> out;
  std::array<int, 4> p{0, 1, 2, 3};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Laurent product_of(const WeightMultiset& w) {
  Laurent total = Laurent::constant(1);
  for (const auto& [form, m] : w.weights())
    for (int i = 0; i < m; ++i) total = total * linform_polynomial(form);
  return total;
}

const OrientationData kDefault;

}  // namespace

TEST_CASE("vertex character of a single point") {
  const Laurent t = cy_reduce(vertex_character(Laurent::constant(1)));
  Laurent expected;
  for (int i = 0; i < 4; ++i) {
    expected.add_term(cy_reduce(unit_exp(i)), 1);
    expected.add_term(cy_reduce(-unit_exp(i)), 1);
    for (int j = i + 1; j < 4; ++j) expected.add_term(cy_reduce(-(unit_exp(i) + unit_exp(j))), -1);
  }
  CHECK(t == expected);
  CHECK(t.value_at_one() == 2);
  CHECK(vertex_character(Laurent()).is_zero());
}

TEST_CASE("vertex character matches the Taylor-complex oracle for n <= 3") {
  int checked = 0;
  for (int n = 0; n <= 3; ++n)
    for (const auto& p : enumerate(4, n)) {
      const auto cmp = vertex_oracle_comparison(p);
      CHECK_MESSAGE(cmp.equal, p.id());
      ++checked;
    }
  CHECK(checked == 1 + 1 + 4 + 10);
}

TEST_CASE("tangent and obstruction weights") {
  const auto point = analyze_fixed_point(enumerate(4, 1)[0], kDefault);
  CHECK(point.e1.size() == 4);
  for (int i = 1; i <= 4; ++i) CHECK(point.e1.multiplicity(-LinForm::s(i)) == 1);
  CHECK(point.e2.size() == 6);
  CHECK(point.e2.is_self_dual());
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) CHECK(point.e2.multiplicity(LinForm::s(i) + LinForm::s(j)) == 1);

  for (const auto& p : enumerate(4, 2)) {
    const auto fp = analyze_fixed_point(p, kDefault);
    CHECK(fp.e1.size() == 8);
    // rank T^vir = 2n = 2 e1 - e2
    CHECK(2 * fp.e1.size() - fp.e2.size() == 4);
  }

  const auto empty = analyze_fixed_point(DPartition::empty(4), kDefault);
  CHECK(empty.e1.size() == 0);
  CHECK(empty.e2.size() == 0);
}

TEST_CASE("obstruction_E2 rejects characters that are not effective") {
  WeightMultiset e1;
  const Laurent too_big = Laurent::constant(0) + Laurent::monomial({1, 0, 0, 0}, 3);
  CHECK_THROWS_AS(obstruction_E2(too_big, e1), Error);
}

TEST_CASE("half Euler class") {
  WeightMultiset e2;
  const LinForm w = LinForm::s(1) + LinForm::s(2);
  e2.add(w);
  e2.add(-w);
  const auto h = half_euler(e2, 1);
  CHECK(h.factors().size() == 1);
  CHECK(fwp_eval(h, TorusParams::default_point().point()) == 11);
  CHECK(fwp_eval(half_euler(e2, -1), TorusParams::default_point().point()) == -11);

  WeightMultiset odd;
  odd.add(w);
  CHECK_THROWS_AS(half_euler(odd, 1), Error);

  WeightMultiset with_zero;
  with_zero.add(LinForm{}, 2);
  CHECK(half_euler(with_zero, 1).is_zero());
  CHECK(half_euler(WeightMultiset{}, 1).factors().empty());
}

TEST_CASE("half Euler class squares to the Euler class up to the pairing sign") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : enumerate(4, n)) {
      const auto fp = analyze_fixed_point(p, kDefault);
      const Laurent h = expand_polynomial(half_euler(fp.e2, 1));
      const Laurent sign = Laurent::constant(fp.e2.size() / 2 % 2 ? -1 : 1);
      CHECK(h * h * sign == product_of(fp.e2));
    }
}

TEST_CASE("single point contribution") {
  const DPartition point = enumerate(4, 1)[0];
  CHECK(fixed_point_contribution(point, TorusParams::parse("1,2,3,-6"), kDefault) == make_rational(-5, 3));
  for (const auto& s : {at(1, 10, 100), at(3, 7, 19), at(-2, 5, 11), at(2, 9, -4)}) {
    const Rational expected = -e_sym(s.point(), 3) / e_sym(s.point(), 4);
    CHECK(fixed_point_contribution(point, s, kDefault) == expected);
    OrientationData flipped;
    flipped.set(point.id(), -1);
    CHECK(fixed_point_contribution(point, s, flipped) == -expected);
  }
  CHECK(fixed_point_contribution(DPartition::empty(4), TorusParams::default_point(), kDefault) == 1);
}

TEST_CASE("orientation data") {
  OrientationData o;
  CHECK_THROWS_AS(o.set("[]", 2), Error);
  o.set("[[0,0,0,0]]", -1);
  CHECK(o.sign(enumerate(4, 1)[0]) == -1);
  CHECK(o.sign(DPartition::empty(4)) == 1);
}

TEST_CASE("S4 symmetry with transported orientation") {
  const auto s = at(3, 7, 19);
  for (int n = 1; n <= 3; ++n)
    for (const auto& perm : all_perms()) {
      Rational lhs = 0, rhs = 0;
      for (const auto& p : enumerate(4, n)) {
        const auto fp = analyze_fixed_point(p, kDefault);
        lhs += evaluate_fixed_point(fp, s);
        OrientationData transported;
        transported.set(p.permuted(perm).id(), half_euler_transport_sign(fp.e2, perm));
        rhs += fixed_point_contribution(p.permuted(perm), s.permuted(perm), transported);
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("series") {
  const auto series = dt4_degree0_series(1, TorusParams::parse("1,2,3,-6"), kDefault, 1);
  REQUIRE(series.coefficients.size() == 2);
  CHECK(series.coefficients[0] == 1);
  CHECK(series.coefficients[1] == make_rational(-5, 3));

  const auto one = dt4_degree0_series(4, TorusParams::default_point(), kDefault, 1);
  const auto many = dt4_degree0_series(4, TorusParams::default_point(), kDefault, 4);
  CHECK(one.coefficients == many.coefficients);
  REQUIRE(one.breakdown.size() == many.breakdown.size());
  for (std::size_t n = 0; n < one.breakdown.size(); ++n) {
    REQUIRE(one.breakdown[n].size() == many.breakdown[n].size());
    for (std::size_t i = 0; i < one.breakdown[n].size(); ++i)
      CHECK(one.breakdown[n][i].point.partition == many.breakdown[n][i].point.partition);
  }
  CHECK(one.breakdown[4].size() == 26);
}

TEST_CASE("non-generic parameters are reported with the offending weight") {
  try {
    dt4_degree0_series(3, TorusParams::parse("1,2,3,-6"), kDefault, 1);
    FAIL("expected NonGenericParameters");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonGenericParameters);
    CHECK(std::string(e.what()).find("s1") != std::string::npos);
  }
  CHECK_THROWS_AS(TorusParams::parse("1,2,3"), Error);
  CHECK_THROWS_AS(TorusParams::parse("1,2,3,4"), Error);
}

TEST_CASE("cyclic completion for plane partitions") {
  const auto point = cyclic_completion_report(enumerate(3, 1)[0]);
  CHECK(point.passed);
  REQUIRE(point.rows.size() == 5);
  CHECK(point.rows[1].four_fold.value_at_one() == 4);
  CHECK(point.rows[2].four_fold.value_at_one() == 6);
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : enumerate(3, n)) CHECK(cyclic_completion_check(p).passed);
  CHECK_THROWS_AS(cyclic_completion_report(enumerate(4, 2)[3]), Error);
}

TEST_CASE("E2 against Ext^1(I, O_Z) for one point") {
  CHECK(ext2_cross_check(enumerate(4, 1)[0]).equal);
}
