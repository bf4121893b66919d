#include "dt4/suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <sstream>

#include "dt4/chow.hpp"
#include "dt4/error.hpp"
#include "dt4/partitions.hpp"
#include "dt4/report.hpp"
#include "dt4/series.hpp"
#include "dt4/vertex.hpp"

namespace dt4 {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (passed) detail.str("");
      else detail << "; ";
      passed = false;
      detail << what;
    }
  }
};

std::vector<DPartition> solid_partitions(int n_min, int n_max) {
  EnumerationBounds bounds;
  bounds.max_n[4] = std::max(bounds.max_n[4], n_max);
  std::vector<DPartition> out;
  for (int n = n_min; n <= n_max; ++n) {
    auto level = enumerate(4, n, bounds);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

void check_liqin(Outcome& o) {
  struct Row {
    int e1, e2;
    long chi, k;
  };
  const std::array<Row, 4> expected{{{0, 1, -6, 4}, {1, 1, -16, 9}, {0, 0, -26, 14}, {1, 0, -56, 29}}};
  for (const auto& row : expected) {
    const LiQinCase c = liqin_case(row.e1, row.e2);
    o.require(c.chi == row.chi && c.k == row.k,
              "(" + std::to_string(row.e1) + "," + std::to_string(row.e2) + "): chi = " + c.chi.get_str() +
                  ", k = " + c.k.get_str());
  }
  if (o.passed) o.detail << "chi = -6, -16, -26, -56; k = 4, 9, 14, 29";
}

void check_chi_ox(Outcome& o) {
  const VarietyContext x = liqin_fourfold();
  const Rational hrr = chi_pair(x, structure_sheaf(x.ambient()), structure_sheaf(x.ambient()));
  // chi_W(O(a, b)) = C(a + 1, 1) C(b + 4, 4) on P^1 x P^4.
  const Integer chi_w = binomial(-2 + 1, 1) * binomial(-5 + 4, 4);
  const Integer oracle = Integer(1) - chi_w;
  o.require(hrr == 2 && Rational(oracle) == hrr, "HRR gives " + hrr.get_str() + ", oracle " + oracle.get_str());
  if (o.passed) o.detail << "HRR 2 = 1 - chi_W(O(-2,-5)) = 2";
}

void check_vdim(Outcome& o) {
  for (int h02 = 0; h02 <= 1; ++h02)
    for (int n = 0; n <= 10; ++n) {
      const int v = vdim_ideal_cy4(n, h02);
      o.require(v == 2 * n - h02, "vdim(" + std::to_string(n) + "," + std::to_string(h02) + ") = " + std::to_string(v));
    }
  if (o.passed) o.detail << "2n - h02 for n <= 10, h02 in {0,1}";
}

void check_vertex_oracle(Outcome& o) {
  const auto parts = solid_partitions(1, 3);
  for (const auto& p : parts) {
    const auto cmp = vertex_oracle_comparison(p);
    o.require(cmp.equal, p.id() + ": difference " + (cmp.vertex - cmp.oracle).to_string());
  }
  o.require(parts.size() == 15, "expected 15 partitions, got " + std::to_string(parts.size()));
  if (o.passed) o.detail << parts.size() << " partitions agree exactly";
}

TorusParams reference_point() {
  return TorusParams(TorusPoint({Rational(1), Rational(2), Rational(3), Rational(-6)}));
}

void check_weights(Outcome& o) {
  const auto parts = solid_partitions(1, 4);
  const TorusParams s = reference_point();
  int structural_ok = 0;
  int vanishing_points = 0;
  std::string first_vanishing;
  for (const auto& p : parts) {
    try {
      const FixedPoint fp = analyze_fixed_point(p, OrientationData{});
      const int n = p.size();
      const bool ok = fp.e2.is_self_dual() && fp.e2.size() % 2 == 0 && 2 * fp.e1.size() - fp.e2.size() == 2 * n &&
                      !fp.e1.contains_zero() && !fp.e2.contains_zero();
      o.require(fp.e2.is_self_dual(), p.id() + ": E2 not self-dual");
      o.require(fp.e2.size() % 2 == 0, p.id() + ": |E2| odd");
      o.require(2 * fp.e1.size() - fp.e2.size() == 2 * n, p.id() + ": 2|E1| - |E2| != 2n");
      o.require(!fp.e1.contains_zero() && !fp.e2.contains_zero(), p.id() + ": trivial weight");
      if (ok) ++structural_ok;
      bool vanishes = false;
      for (const auto* ws : {&fp.e1, &fp.e2})
        for (const auto& [w, m] : ws->weights())
          if (w.evaluate(s.point()) == 0) {
            if (!vanishes && first_vanishing.empty())
              first_vanishing = p.id() + " has " + (ws == &fp.e1 ? "E1" : "E2") + " weight " + w.to_string();
            vanishes = true;
          }
      if (vanishes) ++vanishing_points;
    } catch (const Error& e) {
      o.require(false, p.id() + ": " + e.what());
    }
  }
  o.require(parts.size() == 41, "expected 41 partitions, got " + std::to_string(parts.size()));
  o.require(vanishing_points == 0, std::to_string(vanishing_points) + " of " + std::to_string(parts.size()) +
                                       " fixed points have a weight vanishing at s = (1,2,3,-6), e.g. " +
                                       first_vanishing + " (structure checks passed for " +
                                       std::to_string(structural_ok) + ")");
  if (o.passed) o.detail << parts.size() << " partitions: E2 effective, self-dual, even; 2|E1|-|E2| = 2n";
}

void check_n1(Outcome& o) {
  const DPartition point(4, {Box{0, 0, 0, 0}});
  const FixedPoint fp = analyze_fixed_point(point, OrientationData{});
  const Laurent e3 = elementary_symmetric_reduced(3);
  const Laurent e4 = elementary_symmetric_reduced(4);
  const Laurent half = expand_polynomial(half_euler(fp.e2, 1));
  FactoredWeightProduct tangent;
  for (const auto& [w, m] : fp.e1.weights()) tangent.multiply(w, m);
  const Laurent euler_e1 = expand_polynomial(tangent);
  o.require(half == e3 || half == -e3, "half Euler class " + half.to_string() + " is not +-e3");
  o.require(euler_e1 == e4, "e(E1) = " + euler_e1.to_string() + " is not e4");

  FactoredWeightProduct pairs;
  for (int j = 2; j <= 4; ++j) pairs.multiply(LinForm::s(1) + LinForm::s(j));
  o.require(expand_polynomial(pairs) == e3, "prod_j (s1 + sj) != e3 under s1+s2+s3+s4 = 0");

  const Rational c = fixed_point_contribution(point, reference_point(), OrientationData{});
  o.require(c == Rational(5, 3) || c == Rational(-5, 3), "contribution at (1,2,3,-6) is " + c.get_str());
  if (o.passed) o.detail << "contribution " << c.get_str() << " = " << (half == e3 ? "" : "-") << "e3/e4";
}

void check_cyclic(Outcome& o) {
  int checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : enumerate(3, n)) {
      const auto report = cyclic_completion_report(p);
      for (const auto& row : report.rows)
        o.require(row.equal, p.id() + " degree " + std::to_string(row.degree) + ": difference " +
                                 (row.four_fold - row.predicted).to_string());
      ++checked;
    }
  if (o.passed) o.detail << checked << " plane partitions, degrees 0..4";
}

void check_goettsche(Outcome& o) {
  const auto g3 = goettsche_series(3, 20);
  o.require(g3 == convolution_oracle(3, 20), "e = 3 disagrees with the convolution oracle");
  const std::array<long, 5> head{1, 3, 9, 22, 51};
  for (int n = 0; n < 5; ++n) o.require(g3[n] == head[static_cast<std::size_t>(n)], "e = 3 coefficient " + std::to_string(n));
  const auto g1 = goettsche_series(1, 50);
  const auto p = partition_numbers(50);
  for (int n = 0; n <= 50; ++n)
    o.require(g1[n] == Rational(p[static_cast<std::size_t>(n)]), "e = 1 coefficient " + std::to_string(n));
  if (o.passed) o.detail << "e=3 to q^20, e=1 to q^50 (p(50) = " << p[50].get_str() << ")";
}

void check_surface(Outcome& o) {
  const VarietyContext p2 = VarietyContext::product_projective({2});
  for (int n = 1; n <= 5; ++n) {
    const auto id = surface_obstruction_identity(p2, projective_plane_sheaf(p2, 1, 0, -n));
    o.require(id.equal && id.lhs == 4 * n + 1,
              "c = (1,0,-" + std::to_string(n) + "): " + id.lhs.get_str() + " vs " + id.rhs.get_str());
  }
  const auto id = surface_obstruction_identity(p2, projective_plane_sheaf(p2, 2, 0, 0));
  o.require(id.equal && id.lhs == 4, "c = (2,0,0): " + id.lhs.get_str() + " vs " + id.rhs.get_str());
  if (o.passed) o.detail << "both sides 4n+1 for n <= 5, 4 for (2,0,0)";
}

OrientationData load_orientation(const std::optional<std::string>& path) {
  if (!path) return {};
  std::ifstream in(*path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open orientation file " + *path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("orientation file is not JSON: ") + e.what());
  }
  return orientation_from_json(j);
}

void check_orientation(Outcome& o, const SuiteOptions& options) {
  const OrientationData base = load_orientation(options.orientation);
  const TorusParams s = TorusParams::default_point();
  int flips = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto parts = enumerate(4, n);
    std::vector<Rational> summands;
    Rational total = 0;
    for (const auto& p : parts) {
      summands.push_back(fixed_point_contribution(p, s, base));
      total += summands.back();
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      OrientationData flipped = base;
      flipped.set(parts[i].id(), -base.sign(parts[i]));
      Rational flipped_total = 0;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const Rational c = fixed_point_contribution(parts[j], s, flipped);
        const Rational want = j == i ? Rational(-summands[j]) : summands[j];
        o.require(c == want, parts[j].id() + " changed under a flip at " + parts[i].id());
        flipped_total += c;
      }
      o.require(flipped_total - total == -2 * summands[i], "coefficient shift at " + parts[i].id());
      ++flips;
    }
  }
  if (o.passed) o.detail << flips << " single-point flips negate exactly their summand";
}

void check_determinism(Outcome& o, const SuiteOptions& options) {
  const TorusParams s = TorusParams::default_point();
  const OrientationData orientation;
  const std::string single = to_json(dt4_degree0_series(4, s, orientation, 1), s, true).dump();
  const std::string multi = to_json(dt4_degree0_series(4, s, orientation, std::max(2, options.threads)), s, true).dump();
  const std::string again = to_json(dt4_degree0_series(4, s, orientation, std::max(2, options.threads)), s, true).dump();
  o.require(single == multi && multi == again, "dt4-series output differs across thread counts");
  if (o.passed) o.detail << "n <= 4 report byte-identical (1 vs " << std::max(2, options.threads) << " threads)";
}

struct CheckDef {
  int number;
  std::string group;
  std::string title;
  double time_limit;
  std::function<void(Outcome&, const SuiteOptions&)> run;
};

const std::vector<CheckDef>& checks() {
  static const std::vector<CheckDef> defs{
      {1, "liqin", "Li-Qin table chi(E,E) and k", 1.0, [](Outcome& o, const SuiteOptions&) { check_liqin(o); }},
      {2, "chi", "chi(O_X,O_X) = 2 on the (2,5) hypersurface", 1.0,
       [](Outcome& o, const SuiteOptions&) { check_chi_ox(o); }},
      {3, "vdim", "virtual dimension 2n - h02", 0, [](Outcome& o, const SuiteOptions&) { check_vdim(o); }},
      {4, "vertex", "vertex character vs Taylor oracle, n <= 3", 60.0,
       [](Outcome& o, const SuiteOptions&) { check_vertex_oracle(o); }},
      {5, "weights", "weight structure, n <= 4", 0, [](Outcome& o, const SuiteOptions&) { check_weights(o); }},
      {6, "n1", "n = 1 contribution +-e3/e4", 0, [](Outcome& o, const SuiteOptions&) { check_n1(o); }},
      {7, "cyclic", "cyclic completion for plane partitions, n <= 3", 60.0,
       [](Outcome& o, const SuiteOptions&) { check_cyclic(o); }},
      {8, "goettsche", "Goettsche series vs oracles", 1.0, [](Outcome& o, const SuiteOptions&) { check_goettsche(o); }},
      {9, "surface", "surface obstruction identity on P^2", 0,
       [](Outcome& o, const SuiteOptions&) { check_surface(o); }},
      {10, "orientation", "orientation flips negate single summands", 0,
       [](Outcome& o, const SuiteOptions& opt) { check_orientation(o, opt); }},
      {11, "determinism", "dt4-series byte-identical across thread counts", 0,
       [](Outcome& o, const SuiteOptions& opt) { check_determinism(o, opt); }},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_groups() {
  static const std::vector<std::string> groups = [] {
    std::vector<std::string> g;
    for (const auto& c : checks()) g.push_back(c.group);
    return g;
  }();
  return groups;
}

std::vector<CheckResult> run_suite(const SuiteOptions& options) {
  for (const auto& g : options.only)
    if (std::find(suite_groups().begin(), suite_groups().end(), g) == suite_groups().end())
      throw Error(ErrorKind::InvalidArgument, "unknown suite group '" + g + "'");
  std::vector<CheckResult> results;
  for (const auto& def : checks()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), def.group) == options.only.end())
      continue;
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      def.run(outcome, options);
    } catch (const std::exception& e) {
      outcome.require(false, e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (def.time_limit > 0 && seconds >= def.time_limit)
      outcome.require(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(def.time_limit) + " s");
    results.push_back(
        CheckResult{def.number, def.group, def.title, outcome.passed, outcome.detail.str(), seconds, def.time_limit});
  }
  return results;
}

std::string format_result(const CheckResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << " [" << r.number << "] " << r.group << ": " << r.title << " -- " << r.detail;
  out.precision(3);
  out << " (" << std::fixed << r.seconds << " s)";
  return out.str();
}

}  // namespace dt4
