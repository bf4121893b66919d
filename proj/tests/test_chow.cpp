#include <doctest.h>

#include <random>

#include "dt4/chow.hpp"
#include "dt4/error.hpp"

using namespace dt4;

namespace {

// chi(O(d)) on P^n as the polynomial (d+1)...(d+n)/n!, valid for every integer d.
Rational chi_pn(int n, long d) {
  Rational r = 1;
  for (int i = 1; i <= n; ++i) r *= make_rational(d + i, i);
  return r;
}

// chi of O(a,b) on the (2,5) hypersurface X in P^1 x P^4 from 0 -> O(a-2,b-5) -> O(a,b) -> O_X(a,b) -> 0.
Rational chi_x(long a, long b) { return chi_pn(1, a) * chi_pn(4, b) - chi_pn(1, a - 2) * chi_pn(4, b - 5); }

}  // namespace

TEST_CASE("ring presentation and products") {
  const RingPresentation r({1, 4});
  CHECK(r.dimension() == 5);
  CHECK(r.basis(0).size() == 1);
  CHECK(r.basis(1).size() == 2);
  CHECK(r.basis(5).size() == 1);
  CHECK(r.basis(6).empty());
  const CohClass h1 = CohClass::generator(r, 0), h2 = CohClass::generator(r, 1);
  CHECK((h1 * h1).is_zero());
  CHECK(power(h2, 5).is_zero());
  CHECK((h1 * power(h2, 4)).coefficient({1, 4}) == 1);
  const CohClass u = CohClass::constant(r, 1) + h1 + h2;
  CHECK(u * inverse(u) == CohClass::constant(r, 1));
  CHECK_THROWS_AS(inverse(h1), Error);
}

TEST_CASE("todd and exp series") {
  const auto td = todd_series(4);
  CHECK(td[0] == 1);
  CHECK(td[1] == make_rational(1, 2));
  CHECK(td[2] == make_rational(1, 12));
  CHECK(td[3] == 0);
  CHECK(td[4] == make_rational(-1, 720));
  const auto ex = exp_series(3);
  CHECK(ex[3] == make_rational(1, 6));
}

TEST_CASE("P^1: chi(O) = 1") {
  const auto p1 = VarietyContext::product_projective({1});
  CHECK(p1.todd() == CohClass::constant(p1.ambient(), 1) + CohClass::generator(p1.ambient(), 0));
  const SheafClass o = structure_sheaf(p1.ambient());
  CHECK(chi_pair(p1, o, o) == 1);
  CHECK(euler_characteristic(p1) == 2);
  CHECK(euler_characteristic(VarietyContext::product_projective({4})) == 5);
}

TEST_CASE("P^4: chi(O(d)) matches the binomial formula") {
  const auto p4 = VarietyContext::product_projective({4});
  const SheafClass o = structure_sheaf(p4.ambient());
  for (int d = -6; d <= 5; ++d) {
    const SheafClass l = ch_line(p4.line_class({d}));
    CHECK(chi_pair(p4, o, l) == chi_pn(4, d));
  }
  CHECK(chi_pair(p4, o, ch_line(p4.line_class({5}))) == 126);
}

TEST_CASE("todd class from Chern classes agrees with the multiplicative todd class") {
  for (const auto& ctx : {VarietyContext::product_projective({4}), VarietyContext::product_projective({1, 3}),
                          VarietyContext::hypersurface({1, 4}, {2, 5})}) {
    auto c = ctx.tangent_chern();
    while (c.size() < 5) c.push_back(CohClass(ctx.ambient()));
    CHECK(todd_from_chern(c[1], c[2], c[3], c[4]) == ctx.todd().truncated(4));
  }
}

TEST_CASE("ch_line and tensor products") {
  const RingPresentation r({1, 4});
  const CohClass a = CohClass::linear(r, {Rational(1), Rational(-2)});
  const CohClass b = CohClass::linear(r, {Rational(3), Rational(1)});
  CHECK(ch_line(a) * ch_line(b) == ch_line(a + b));
  CHECK(ch_line(a).dual() == ch_line(a * Rational(-1)));
  CHECK(ch_line(a).rank() == 1);
  CHECK(ch_line(a).component(1).coefficient({1, 0}) == 1);
  CHECK(ch_line(a).component(2).coefficient({0, 2}) == 2);
}

TEST_CASE("Chern class and Chern character round trip") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> d(-3, 3);
  const RingPresentation r({1, 4});
  for (int trial = 0; trial < 30; ++trial) {
    const int rank = 1 + trial % 3;
    SheafClass s = ch_line(CohClass::linear(r, {Rational(d(rng)), Rational(d(rng))}));
    for (int i = 1; i < rank; ++i) s = s + ch_line(CohClass::linear(r, {Rational(d(rng)), Rational(d(rng))}));
    const auto c = ch_to_chern(s);
    CHECK(chern_to_ch(Rational(rank), c).ch().truncated(5) == s.ch().truncated(5));
  }
  // rank 2 with c1 = 0: ch2 = -c2.
  const CohClass h = CohClass::generator(r, 1);
  const SheafClass e = ch_line(h) + ch_line(h * Rational(-1));
  const auto c = ch_to_chern(e);
  CHECK(c[1].is_zero());
  CHECK(e.component(2) == c[2] * Rational(-1));
}

TEST_CASE("Chern components of a total class") {
  const RingPresentation r({4});
  const CohClass h = CohClass::generator(r, 0);
  const CohClass total = power(CohClass::constant(r, 1) + h, 5);
  const auto c = chern_components(total);
  REQUIRE(c.size() >= 5);
  CHECK(c[1] == h * Rational(5));
  CHECK(c[4] == power(h, 4) * Rational(5));
}

TEST_CASE("hypersurface: chi(O_X) = 2 against the restriction-sequence oracle") {
  const auto x = liqin_fourfold();
  CHECK(x.dimension() == 4);
  const SheafClass o = structure_sheaf(x.ambient());
  CHECK(chi_pair(x, o, o) == 2);
  CHECK(chi_x(0, 0) == 2);
  // canonical class is trivial: c1(T_X) = 0
  CHECK(x.tangent_chern()[1].is_zero());
}

TEST_CASE("hypersurface: chi of line bundles and Serre symmetry") {
  const auto x = liqin_fourfold();
  const SheafClass o = structure_sheaf(x.ambient());
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) CHECK(chi_pair(x, o, ch_line(x.line_class({a, b}))) == chi_x(a, b));

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 25; ++trial) {
    const SheafClass e = ch_line(x.line_class({d(rng), d(rng)})) - ch_line(x.line_class({d(rng), d(rng)}));
    const SheafClass f = ch_line(x.line_class({d(rng), d(rng)})) + ch_line(x.line_class({d(rng), d(rng)}));
    CHECK(chi_pair(x, e, f) == chi_pair(x, f, e));
  }
}

TEST_CASE("Li-Qin four-fold cases") {
  const std::array<std::array<long, 4>, 4> expected{{{0, 1, -6, 4}, {1, 1, -16, 9}, {0, 0, -26, 14}, {1, 0, -56, 29}}};
  for (const auto& [e1, e2, chi, k] : expected) {
    const LiQinCase c = liqin_case(static_cast<int>(e1), static_cast<int>(e2));
    CHECK(c.chi == chi);
    CHECK(c.k == k);
    // E = L1 + L2 with L1 = O(-1,1), L2 = O(e1+1, e2-1).
    const Rational oracle = 2 * chi_x(0, 0) + chi_x(e1 + 2, e2 - 2) + chi_x(-e1 - 2, 2 - e2);
    CHECK(Rational(c.chi) == oracle);
    CHECK((2 - c.chi) % 2 == 0);
    CHECK(2 - c.chi > 0);
  }
  CHECK_THROWS_AS(liqin_case(2, 0), Error);
}

TEST_CASE("virtual dimension of ideal sheaves of points") {
  CHECK(vdim_ideal_cy4(1, 0) == 2);
  CHECK(vdim_ideal_cy4(1, 1) == 1);
  CHECK(vdim_ideal_cy4(0, 0) == 0);
  for (int n = 0; n <= 10; ++n)
    for (int h = 0; h <= 1; ++h) {
      CHECK(chi_ideal_cy4(n, h) == -2 * n + 2 + h);
      CHECK(vdim_ideal_cy4(n, h) == 2 - chi_ideal_cy4(n, h));
    }
}

TEST_CASE("surface obstruction identity on P^2") {
  const auto p2 = VarietyContext::product_projective({2});
  CHECK(integrate(p2, p2.tangent_chern()[2]) == 3);
  CHECK(euler_characteristic(p2) == 3);
  for (int n = 1; n <= 5; ++n) {
    const auto id = surface_obstruction_identity(p2, projective_plane_sheaf(p2, 1, 0, -n));
    CHECK(id.equal);
    CHECK(id.lhs == 4 * n + 1);
    CHECK(id.rhs == 4 * n + 1);
  }
  const auto id = surface_obstruction_identity(p2, projective_plane_sheaf(p2, 2, 0, 0));
  CHECK(id.lhs == 4);
  CHECK(id.rhs == 4);
  // chi(Omega^1) = -1 on P^2
  CHECK(chi_pair(p2, structure_sheaf(p2.ambient()), p2.cotangent()) == -1);
}
