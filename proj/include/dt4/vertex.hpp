#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dt4/laurent.hpp"
#include "dt4/partitions.hpp"
#include "dt4/weights.hpp"

namespace dt4 {

// Equivariant parameters together with the genericity check applied to
// every weight that enters a denominator.
class TorusParams {
 public:
  explicit TorusParams(TorusPoint s) : s_(std::move(s)) {}
  // (1, 10, 100, -111): no weight with reduced coefficients of absolute value
  // at most 9 vanishes there.
  static TorusParams default_point();
  static TorusParams parse(const std::string& csv);  // "a,b,c,d"

  const TorusPoint& point() const { return s_; }
  // Throws Error(NonGenericParameters) naming the first weight vanishing at s.
  void certify(const WeightMultiset& weights) const;
  TorusParams permuted(const std::array<int, 4>& perm) const;

 private:
  TorusPoint s_;
};

// Per-fixed-point orientation signs keyed by DPartition::id(); points without
// an entry use +1, i.e. the isotropic half whose weights have positive
// leading reduced coefficient.
class OrientationData {
 public:
  void set(const std::string& id, int sign);  // throws unless sign is +-1
  int sign(const DPartition& p) const;
  const std::map<std::string, int>& overrides() const { return signs_; }

 private:
  std::map<std::string, int> signs_;
};

// T^vir = Q + Qbar kappa^-1 - Q Qbar prod_i (1 - t_i^-1), on the full torus.
Laurent vertex_character(const Laurent& q);

// Zariski tangent space Hom(I, O_Z), as CY-reduced weights.
WeightMultiset tangent_E1(const MonomialIdeal& ideal);

// E2 = E1 + E1^dual - T^vir with T^vir CY-reduced. Throws Error(NotEffective)
// if some multiplicity would be negative.
WeightMultiset obstruction_E2(const Laurent& tvir_reduced, const WeightMultiset& e1);

// Product over one weight from each {w, -w} pair (leading coefficient
// positive) times the orientation sign; zero-flagged when E2 has a zero
// weight. Throws Error(OddPairing) if E2 is not self-dual.
FactoredWeightProduct half_euler(const WeightMultiset& e2, int orientation);

// Sign relating the default isotropic half of the permuted multiset to the
// permuted default isotropic half of e2.
int half_euler_transport_sign(const WeightMultiset& e2, const std::array<int, 4>& perm);

struct FixedPoint {
  DPartition partition;
  Laurent tvir;  // CY-reduced
  WeightMultiset e1;
  WeightMultiset e2;
  int orientation = 1;
  FactoredWeightProduct weight;  // half_euler(e2) / e(e1), factored
};

FixedPoint analyze_fixed_point(const DPartition& p, const OrientationData& orientation);

// half_euler(E2, o) / prod_{w in E1} w evaluated at s.
Rational fixed_point_contribution(const DPartition& p, const TorusParams& s, const OrientationData& orientation);
Rational evaluate_fixed_point(const FixedPoint& fp, const TorusParams& s);

struct SeriesTerm {
  FixedPoint point;
  Rational contribution;
};

struct Dt4Series {
  std::vector<Rational> coefficients;             // index n
  std::vector<std::vector<SeriesTerm>> breakdown;  // per n, canonical order
};

// Coefficient n is the sum over all solid partitions of size n. Work is
// spread over `threads` workers; results are assembled in canonical order.
Dt4Series dt4_degree0_series(int n_max, const TorusParams& s, const OrientationData& orientation, int threads = 1,
                             const EnumerationBounds& bounds = EnumerationBounds::from_environment());

// Compares vertex_character(Q) with Q + Qbar kappa^-1 - sum_i (-1)^i char Ext^i(O_Z, O_Z).
struct OracleComparison {
  Laurent vertex;
  Laurent oracle;
  bool equal = false;
};
OracleComparison vertex_oracle_comparison(const DPartition& p);

// Cross-check of E2 against char Ext^1(I, O_Z) (CY-reduced).
struct Ext1Comparison {
  WeightMultiset e2;
  Laurent ext1_ideal;
  bool equal = false;
};
Ext1Comparison ext2_cross_check(const DPartition& p);

struct CyclicRow {
  int degree = 0;
  Laurent four_fold;   // CY-reduced char Ext^i on C^4
  Laurent predicted;   // CY-reduced char Ext^i_{C^3} + bar(char Ext^{4-i}_{C^3})
  bool equal = false;
};

struct CyclicReport {
  DPartition partition;
  std::vector<CyclicRow> rows;
  bool passed = false;
};

CyclicReport cyclic_completion_report(const DPartition& plane_partition);
// As above but throws Error(CheckFailed) naming the first failing degree.
CyclicReport cyclic_completion_check(const DPartition& plane_partition);

}  // namespace dt4
