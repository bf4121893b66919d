#include "dt4/vertex.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <sstream>
#include <thread>

#include "dt4/error.hpp"
#include "dt4/taylor.hpp"

namespace dt4 {

TorusParams TorusParams::default_point() {
  return TorusParams(TorusPoint({Rational(1), Rational(10), Rational(100), Rational(-111)}));
}

TorusParams TorusParams::parse(const std::string& csv) {
  std::array<Rational, 4> s;
  std::stringstream in(csv);
  std::string item;
  std::size_t i = 0;
  while (std::getline(in, item, ',')) {
    if (i >= 4) throw Error(ErrorKind::InvalidArgument, "expected four torus parameters in '" + csv + "'");
    s[i++] = parse_rational(item);
  }
  if (i != 4) throw Error(ErrorKind::InvalidArgument, "expected four torus parameters in '" + csv + "'");
  return TorusParams(TorusPoint(s));
}

void TorusParams::certify(const WeightMultiset& weights) const {
  for (const auto& [w, m] : weights.weights())
    if (w.evaluate(s_) == 0)
      throw Error(ErrorKind::NonGenericParameters,
                  "weight " + w.to_string() + " vanishes at s = " + s_.to_string());
}

TorusParams TorusParams::permuted(const std::array<int, 4>& perm) const {
  std::array<Rational, 4> t;
  for (std::size_t i = 0; i < 4; ++i) t[static_cast<std::size_t>(perm[i])] = s_[i];
  return TorusParams(TorusPoint(t));
}

void OrientationData::set(const std::string& id, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "orientation sign must be +1 or -1");
  signs_[id] = sign;
}

int OrientationData::sign(const DPartition& p) const {
  auto it = signs_.find(p.id());
  return it == signs_.end() ? 1 : it->second;
}

Laurent vertex_character(const Laurent& q) {
  const Laurent qbar = laurent_bar(q);
  return q + qbar * Laurent::monomial(-kKappa) - q * qbar * koszul_factor_dual();
}

WeightMultiset tangent_E1(const MonomialIdeal& ideal) {
  TaylorOptions options;
  options.max_degree = 0;
  const auto ext = taylor_ext_oracle(ideal, ExtSource::Ideal, options);
  return WeightMultiset::from_character(cy_reduce(ext[0]));
}

WeightMultiset obstruction_E2(const Laurent& tvir_reduced, const WeightMultiset& e1) {
  const Laurent e1_char = e1.to_character();
  const Laurent e2_char = e1_char + cy_reduce(laurent_bar(e1_char)) - tvir_reduced;
  return WeightMultiset::from_character(e2_char);
}

FactoredWeightProduct half_euler(const WeightMultiset& e2, int orientation) {
  if (orientation != 1 && orientation != -1)
    throw Error(ErrorKind::InvalidArgument, "orientation sign must be +1 or -1");
  if (e2.contains_zero()) return FactoredWeightProduct::zero();
  FactoredWeightProduct out;
  for (const auto& [w, m] : e2.weights()) {
    if (e2.multiplicity(-w) != m)
      throw Error(ErrorKind::OddPairing, "weight " + w.to_string() + " has multiplicity " + std::to_string(m) +
                                             " but its negative has " + std::to_string(e2.multiplicity(-w)));
    if (w.leading_sign() > 0) out.multiply(w, m);
  }
  if (orientation < 0) out.negate();
  return out;
}

int half_euler_transport_sign(const WeightMultiset& e2, const std::array<int, 4>& perm) {
  int sign = 1;
  for (const auto& [w, m] : e2.weights())
    if (w.leading_sign() > 0 && w.permuted(perm).leading_sign() < 0 && m % 2 != 0) sign = -sign;
  return sign;
}

FixedPoint analyze_fixed_point(const DPartition& p, const OrientationData& orientation) {
  if (p.dim() != 4) throw Error(ErrorKind::InvalidArgument, "fixed points are solid partitions (d = 4)");
  FixedPoint fp{p, cy_reduce(vertex_character(char_Q(p))), {}, {}, orientation.sign(p), {}};
  fp.e1 = tangent_E1(to_ideal(p));
  fp.e2 = obstruction_E2(fp.tvir, fp.e1);
  fp.weight = half_euler(fp.e2, fp.orientation);
  for (const auto& [w, m] : fp.e1.weights()) {
    if (w.is_zero()) throw Error(ErrorKind::InternalInconsistency, "trivial weight in the tangent space at " + p.id());
    fp.weight.multiply(w, -m);
  }
  return fp;
}

Rational evaluate_fixed_point(const FixedPoint& fp, const TorusParams& s) {
  s.certify(fp.e1);
  return fwp_eval(fp.weight, s.point());
}

Rational fixed_point_contribution(const DPartition& p, const TorusParams& s, const OrientationData& orientation) {
  return evaluate_fixed_point(analyze_fixed_point(p, orientation), s);
}

Dt4Series dt4_degree0_series(int n_max, const TorusParams& s, const OrientationData& orientation, int threads,
                             const EnumerationBounds& bounds) {
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be nonnegative");
  std::vector<DPartition> all;
  std::vector<std::size_t> offsets{0};
  for (int n = 0; n <= n_max; ++n) {
    auto level = enumerate(4, n, bounds);
    all.insert(all.end(), level.begin(), level.end());
    offsets.push_back(all.size());
  }

  std::vector<std::optional<SeriesTerm>> terms(all.size());
  std::vector<std::exception_ptr> errors(all.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < all.size(); i = next++) {
      try {
        FixedPoint fp = analyze_fixed_point(all[i], orientation);
        Rational c = evaluate_fixed_point(fp, s);
        terms[i].emplace(SeriesTerm{std::move(fp), std::move(c)});
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n_workers = std::max(1, threads);
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  }
  // Report the first failure in canonical order, independent of scheduling.
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Dt4Series out;
  for (int n = 0; n <= n_max; ++n) {
    Rational sum = 0;
    std::vector<SeriesTerm> level;
    for (std::size_t i = offsets[static_cast<std::size_t>(n)]; i < offsets[static_cast<std::size_t>(n) + 1]; ++i) {
      sum += terms[i]->contribution;
      level.push_back(std::move(*terms[i]));
    }
    out.coefficients.push_back(sum);
    out.breakdown.push_back(std::move(level));
  }
  return out;
}

OracleComparison vertex_oracle_comparison(const DPartition& p) {
  const Laurent q = char_Q(p);
  const auto ext = taylor_ext_oracle(to_ideal(p.embedded(4)), ExtSource::StructureSheaf);
  OracleComparison out;
  out.vertex = vertex_character(q);
  out.oracle = q + laurent_bar(q) * Laurent::monomial(-kKappa) - alternating_sum(ext);
  out.equal = out.vertex == out.oracle;
  return out;
}

Ext1Comparison ext2_cross_check(const DPartition& p) {
  const FixedPoint fp = analyze_fixed_point(p, OrientationData{});
  TaylorOptions options;
  options.max_degree = 1;
  const auto ext = taylor_ext_oracle(to_ideal(p), ExtSource::Ideal, options);
  Ext1Comparison out{fp.e2, cy_reduce(ext[1]), false};
  out.equal = fp.e2.to_character() == out.ext1_ideal;
  return out;
}

CyclicReport cyclic_completion_report(const DPartition& plane_partition) {
  if (plane_partition.dim() != 3) throw Error(ErrorKind::InvalidArgument, "cyclic completion check takes a plane partition");
  const auto ext3 = taylor_ext_oracle(to_ideal(plane_partition), ExtSource::StructureSheaf);
  const auto ext4 = taylor_ext_oracle(to_ideal(plane_partition.embedded(4)), ExtSource::StructureSheaf);
  CyclicReport report{plane_partition, {}, true};
  for (int i = 0; i <= 4; ++i) {
    CyclicRow row;
    row.degree = i;
    row.four_fold = cy_reduce(ext4[static_cast<std::size_t>(i)]);
    Laurent predicted;
    if (i <= 3) predicted += ext3[static_cast<std::size_t>(i)];
    if (4 - i <= 3) predicted += laurent_bar(ext3[static_cast<std::size_t>(4 - i)]);
    row.predicted = cy_reduce(predicted);
    row.equal = row.four_fold == row.predicted;
    report.passed = report.passed && row.equal;
    report.rows.push_back(std::move(row));
  }
  return report;
}

CyclicReport cyclic_completion_check(const DPartition& plane_partition) {
  CyclicReport report = cyclic_completion_report(plane_partition);
  for (const auto& row : report.rows)
    if (!row.equal)
      throw Error(ErrorKind::CheckFailed, "cyclic completion fails for " + plane_partition.id() + " in degree " +
                                              std::to_string(row.degree) + ": difference " +
                                              (row.four_fold - row.predicted).to_string());
  return report;
}

}  // namespace dt4
