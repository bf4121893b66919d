// dt4: command-line front end for the exact DT4 computations.
//
// Exit codes: 0 success, 1 check/mismatch failure, 2 usage error,
// 3 enumeration or Taylor bound exceeded, 4 other domain error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dt4/chow.hpp"
#include "dt4/error.hpp"
#include "dt4/partitions.hpp"
#include "dt4/report.hpp"
#include "dt4/series.hpp"
#include "dt4/suite.hpp"
#include "dt4/taylor.hpp"
#include "dt4/vertex.hpp"

namespace {

using namespace dt4;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;
constexpr int kExitDomain = 4;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, path + ": " + e.what());
  }
}

// Inline JSON if it parses, otherwise a file path.
json json_argument(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception&) {
    return read_json_file(text);
  }
}

EnumerationBounds bounds_for(const RunConfig& c) {
  EnumerationBounds b = EnumerationBounds::from_environment();
  if (c.max_n) b.max_n[4] = *c.max_n;
  return b;
}

OrientationData orientation_for(const RunConfig& c) {
  if (c.orientation == "default") return {};
  return orientation_from_json(read_json_file(c.orientation));
}

int cmd_liqin(OutputFormat format) {
  struct Expected {
    int e1, e2;
    long chi, k;
  };
  const Expected table[] = {{0, 1, -6, 4}, {1, 1, -16, 9}, {0, 0, -26, 14}, {1, 0, -56, 29}};
  bool all_match = true;
  json rows = json::array();
  std::ostringstream text;
  std::ostringstream csv;
  csv << "eps1,eps2,chi,k,binomial_form,match\n";
  text << "eps1 eps2      chi    k  (1+eps1)*C(6-eps2,4)  match\n";
  for (const auto& e : table) {
    const LiQinCase c = liqin_case(e.e1, e.e2);
    const bool match = c.chi == e.chi && c.k == e.k;
    all_match = all_match && match;
    rows.push_back(json{{"eps1", c.eps1},
                        {"eps2", c.eps2},
                        {"chi", c.chi.get_si()},
                        {"k", c.k.get_si()},
                        {"binomial_form", c.binomial_form.get_si()},
                        {"match", match}});
    csv << c.eps1 << "," << c.eps2 << "," << c.chi.get_str() << "," << c.k.get_str() << ","
        << c.binomial_form.get_str() << "," << (match ? "true" : "false") << "\n";
    char line[128];
    std::snprintf(line, sizeof line, "%4d %4d %8s %4s  %20s  %s\n", c.eps1, c.eps2, c.chi.get_str().c_str(),
                  c.k.get_str().c_str(), c.binomial_form.get_str().c_str(), match ? "yes" : "NO");
    text << line;
  }
  text << "k = (2 - chi)/2; the binomial column is reported for comparison only\n";
  if (format == OutputFormat::Json)
    std::cout << json{{"cases", rows}, {"match", all_match}}.dump(2) << "\n";
  else if (format == OutputFormat::Csv)
    std::cout << csv.str();
  else
    std::cout << text.str();
  return all_match ? 0 : kExitMismatch;
}

int cmd_chi(const std::string& context, const std::string& e_arg, const std::string& f_arg, OutputFormat format) {
  const VarietyContext ctx = context.empty() ? liqin_fourfold() : context_from_json(json_argument(context));
  const SheafClass e = e_arg.empty() ? structure_sheaf(ctx.ambient()) : sheaf_from_json(ctx, json_argument(e_arg));
  const SheafClass f = f_arg.empty() ? e : sheaf_from_json(ctx, json_argument(f_arg));
  const Rational chi = chi_pair(ctx, e, f);
  if (format == OutputFormat::Json)
    std::cout << json{{"context", context_to_json(ctx)},
                      {"E", sheaf_to_json(e)},
                      {"F", sheaf_to_json(f)},
                      {"chi", to_string(chi)}}
                     .dump(2)
              << "\n";
  else if (format == OutputFormat::Csv)
    std::cout << "chi\n" << to_string(chi) << "\n";
  else
    std::cout << "chi(E,F) = " << to_string(chi) << "\n";
  return 0;
}

int cmd_vdim(int n, int h02, OutputFormat format) {
  const int v = vdim_ideal_cy4(n, h02);
  const Integer chi = chi_ideal_cy4(n, h02);
  if (format == OutputFormat::Json)
    std::cout << json{{"n", n}, {"h02", h02}, {"chi_II", chi.get_si()}, {"vdim", v}}.dump(2) << "\n";
  else if (format == OutputFormat::Csv)
    std::cout << "n,h02,chi_II,vdim\n" << n << "," << h02 << "," << chi.get_str() << "," << v << "\n";
  else
    std::cout << "chi(I,I) = " << chi.get_str() << ", real virtual dimension = " << v << "\n";
  return 0;
}

int cmd_partitions(int d, int n, bool counts, const RunConfig& cfg, OutputFormat format) {
  EnumerationBounds bounds = bounds_for(cfg);
  if (counts) {
    const auto c = count_up_to(d, n, bounds);
    if (format == OutputFormat::Csv) {
      std::cout << "n,count\n";
      for (std::size_t k = 0; k < c.size(); ++k) std::cout << k << "," << c[k] << "\n";
    } else if (format == OutputFormat::Json) {
      std::cout << json{{"d", d}, {"counts", c}}.dump() << "\n";
    } else {
      for (std::size_t k = 0; k < c.size(); ++k) std::cout << "n = " << k << ": " << c[k] << "\n";
    }
    return 0;
  }
  const auto parts = enumerate(d, n, bounds);
  if (format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& p : parts) arr.push_back(to_json(p));
    std::cout << json{{"d", d}, {"n", n}, {"count", parts.size()}, {"partitions", arr}}.dump() << "\n";
  } else {
    for (const auto& p : parts) std::cout << p.id() << "\n";
    if (format == OutputFormat::Text) std::cout << parts.size() << " partitions\n";
  }
  return 0;
}

int cmd_vertex(const std::string& boxes, const RunConfig& cfg, OutputFormat format) {
  const DPartition p = partition_from_json(4, json_argument(boxes));
  const TorusParams s = TorusParams::parse(cfg.torus);
  const OrientationData orientation = orientation_for(cfg);
  const FixedPoint fp = analyze_fixed_point(p, orientation);
  const Rational c = evaluate_fixed_point(fp, s);
  const auto oracle = vertex_oracle_comparison(p);
  const auto cross = ext2_cross_check(p);
  if (format == OutputFormat::Json) {
    json out = to_json(SeriesTerm{fp, c});
    out["tvir"] = fp.tvir.to_string();
    out["weight"] = fp.weight.to_string();
    out["oracle_agrees"] = oracle.equal;
    out["E2_equals_Ext1_I_OZ"] = cross.equal;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "partition     " << p.id() << "\n"
              << "T^vir (CY)    " << fp.tvir.to_string() << "\n"
              << "E1            " << to_json(fp.e1).dump() << "\n"
              << "E2            " << to_json(fp.e2).dump() << "\n"
              << "weight        " << fp.weight.to_string() << "\n"
              << "contribution  " << to_string(c) << "\n"
              << "oracle        " << (oracle.equal ? "PASS" : "FAIL") << "\n"
              << "E2 = Ext^1(I,O_Z): " << (cross.equal ? "yes" : "no, difference " +
                                                                   (cross.e2.to_character() - cross.ext1_ideal).to_string())
              << "\n";
  }
  return oracle.equal ? 0 : kExitMismatch;
}

int cmd_dt4_series(const RunConfig& cfg, bool breakdown) {
  const TorusParams s = TorusParams::parse(cfg.torus);
  const OrientationData orientation = orientation_for(cfg);
  const EnumerationBounds bounds = bounds_for(cfg);
  int status = 0;
  if (cfg.check_oracle) {
    int checked = 0;
    bool ok = true;
    for (int n = 1; n <= cfg.n_max; ++n)
      for (const auto& p : enumerate(4, n, bounds)) {
        const auto cmp = vertex_oracle_comparison(p);
        if (!cmp.equal) {
          ok = false;
          std::cerr << "oracle mismatch at " << p.id() << ": " << (cmp.vertex - cmp.oracle).to_string() << "\n";
        }
        ++checked;
      }
    std::cerr << "oracle: " << (ok ? "PASS" : "FAIL") << " with " << checked << " partitions checked\n";
    if (!ok) status = kExitMismatch;
  }
  const Dt4Series series = dt4_degree0_series(cfg.n_max, s, orientation, cfg.threads, bounds);
  switch (cfg.format) {
    case OutputFormat::Json:
      std::cout << to_json(series, s, breakdown).dump(2) << "\n";
      break;
    case OutputFormat::Csv:
      std::cout << "n,coefficient\n";
      for (std::size_t n = 0; n < series.coefficients.size(); ++n)
        std::cout << n << "," << to_string(series.coefficients[n]) << "\n";
      break;
    case OutputFormat::Text:
      for (std::size_t n = 0; n < series.coefficients.size(); ++n) {
        std::cout << "q^" << n << ": " << to_string(series.coefficients[n]) << "\n";
        if (breakdown)
          for (const auto& t : series.breakdown[n])
            std::cout << "    " << t.point.partition.id() << "  " << to_string(t.contribution) << "\n";
      }
      break;
  }
  return status;
}

int cmd_goettsche(int euler, int n_max, bool oracle, OutputFormat format) {
  const CoefficientSeries g = goettsche_series(euler, n_max);
  bool ok = true;
  if (oracle) ok = euler >= 1 && g == convolution_oracle(euler, n_max);
  json coeffs = json::array();
  for (const auto& c : g.coefficients()) coeffs.push_back(json::parse(c.get_num().get_str()));
  if (format == OutputFormat::Json) {
    json out{{"euler", euler}, {"series", coeffs}};
    if (oracle) out["oracle_agrees"] = ok;
    std::cout << out.dump() << "\n";
  } else if (format == OutputFormat::Csv) {
    std::cout << "n,coefficient\n";
    for (int n = 0; n <= n_max; ++n) std::cout << n << "," << g[n].get_str() << "\n";
  } else {
    for (int n = 0; n <= n_max; ++n) std::cout << (n ? " " : "") << g[n].get_str();
    std::cout << "\n";
    if (oracle) std::cout << "oracle: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : kExitMismatch;
}

int cmd_tstar(const std::string& c, int euler, OutputFormat format) {
  std::vector<long> slots;
  std::stringstream in(c);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      slots.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "--c must be three integers 'r,c1,ch2'");
    }
  }
  if (slots.size() != 3) throw Error(ErrorKind::InvalidArgument, "--c must be three integers 'r,c1,ch2'");
  const TStarValue v = reduced_dt4_tstar(slots[0], slots[1], slots[2], euler);
  if (format == OutputFormat::Json)
    std::cout << json{{"c", slots}, {"euler", euler}, {"value", v.value.get_str()}, {"rule", v.rule}}.dump() << "\n";
  else if (format == OutputFormat::Csv)
    std::cout << "value,rule\n" << v.value.get_str() << ",\"" << v.rule << "\"\n";
  else
    std::cout << v.value.get_str() << "  (" << v.rule << ")\n";
  return 0;
}

int cmd_cyclic(const std::string& boxes, int n_max, OutputFormat format) {
  std::vector<DPartition> parts;
  if (!boxes.empty()) {
    parts.push_back(partition_from_json(3, json_argument(boxes)));
  } else {
    for (int n = 1; n <= n_max; ++n) {
      auto level = enumerate(3, n);
      parts.insert(parts.end(), level.begin(), level.end());
    }
  }
  bool ok = true;
  json reports = json::array();
  for (const auto& p : parts) {
    const CyclicReport r = cyclic_completion_report(p);
    ok = ok && r.passed;
    reports.push_back(to_json(r));
    if (format == OutputFormat::Text) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << p.id() << "\n";
      if (!r.passed)
        for (const auto& row : r.rows)
          if (!row.equal)
            std::cout << "    degree " << row.degree << ": " << (row.four_fold - row.predicted).to_string() << "\n";
    } else if (format == OutputFormat::Csv) {
      std::cout << (reports.size() == 1 ? "partition,passed\n" : "") << "\"" << p.id() << "\","
                << (r.passed ? "true" : "false") << "\n";
    }
  }
  if (format == OutputFormat::Json) std::cout << json{{"reports", reports}, {"passed", ok}}.dump(2) << "\n";
  return ok ? 0 : kExitMismatch;
}

int cmd_suite(const SuiteOptions& options, OutputFormat format) {
  const auto results = run_suite(options);
  bool ok = true;
  json arr = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (format == OutputFormat::Text) std::cout << format_result(r) << "\n";
    arr.push_back(json{{"number", r.number},
                       {"group", r.group},
                       {"title", r.title},
                       {"passed", r.passed},
                       {"detail", r.detail}});
  }
  if (format == OutputFormat::Json) std::cout << json{{"checks", arr}, {"passed", ok}}.dump(2) << "\n";
  if (format == OutputFormat::Csv) {
    std::cout << "number,group,passed\n";
    for (const auto& r : results) std::cout << r.number << "," << r.group << "," << (r.passed ? "true" : "false") << "\n";
  }
  if (format == OutputFormat::Text) std::cout << (ok ? "suite: all checks passed" : "suite: FAILED") << "\n";
  return ok ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Donaldson-Thomas computations for Calabi-Yau four-folds"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  int max_n = -1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--max-n", max_n, "Override the d = 4 enumeration bound (also DT4_MAX_N)");

  auto* liqin = app.add_subcommand("liqin", "chi(E,E) and k for the Li-Qin rank-2 bundles");

  std::string context, e_sheaf, f_sheaf;
  auto* chi = app.add_subcommand("chi", "Euler pairing chi(E,F) by Hirzebruch-Riemann-Roch");
  chi->add_option("--context", context, "Context JSON (inline or file); default: (2,5) hypersurface in P1xP4");
  chi->add_option("--E", e_sheaf, "Sheaf JSON for E; default: structure sheaf");
  chi->add_option("--F", f_sheaf, "Sheaf JSON for F; default: E");

  int n_points = 1, h02 = 0;
  auto* vdim = app.add_subcommand("vdim", "Real virtual dimension for ideal sheaves of points");
  vdim->add_option("--n", n_points, "Number of points")->check(CLI::NonNegativeNumber);
  vdim->add_option("--h02", h02, "h^{0,2}: 0 (SU(4)) or 1 (Sp(2))")->check(CLI::IsMember({0, 1}));

  int dim = 4, size = 2;
  bool counts = false;
  auto* partitions = app.add_subcommand("partitions", "Enumerate or count d-dimensional partitions");
  partitions->add_option("--dim", dim, "Dimension d")->check(CLI::IsMember({2, 3, 4}));
  partitions->add_option("--n", size, "Size (upper limit with --counts)")->check(CLI::NonNegativeNumber);
  partitions->add_flag("--counts", counts, "Counts for every size 0..n");

  std::string boxes;
  auto* vertex = app.add_subcommand("vertex", "Fixed-point data for one solid partition");
  vertex->add_option("--boxes", boxes, "Box list JSON, e.g. [[0,0,0,0],[1,0,0,0]]")->required();
  vertex->add_option("--s", cfg.torus, "Torus parameters a,b,c,d with a+b+c+d = 0");
  vertex->add_option("--orientation", cfg.orientation, "default or an orientation JSON file");

  bool breakdown = false, print_config = false;
  auto* series = app.add_subcommand("dt4-series", "Degree-zero equivariant DT4 series");
  series->add_option("--n-max", cfg.n_max, "Highest power of q")->check(CLI::NonNegativeNumber);
  series->add_option("--s", cfg.torus, "Torus parameters a,b,c,d with a+b+c+d = 0");
  series->add_option("--orientation", cfg.orientation, "default or an orientation JSON file");
  series->add_flag("--check-oracle", cfg.check_oracle, "Verify the vertex character against the Taylor oracle");
  series->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  series->add_flag("--breakdown", breakdown, "Include per-fixed-point contributions");
  series->add_flag("--print-config", print_config, "Print the parsed run configuration as JSON and exit");

  int euler = 3, g_nmax = 10;
  bool g_oracle = false;
  auto* goettsche = app.add_subcommand("goettsche", "prod_k (1-q^k)^(-e)");
  goettsche->add_option("--euler", euler, "Euler number e(S)");
  goettsche->add_option("--n-max", g_nmax, "Highest power of q")->check(CLI::NonNegativeNumber);
  goettsche->add_flag("--oracle", g_oracle, "Compare with the convolution oracle");

  std::string c_slots = "1,0,-1";
  int t_euler = 3;
  auto* tstar = app.add_subcommand("tstar", "Reduced DT4 invariants of T*S");
  tstar->add_option("--c", c_slots, "Chern character r,c1,ch2");
  tstar->add_option("--euler", t_euler, "Euler number e(S)");

  std::string cyc_boxes;
  int cyc_nmax = 3;
  auto* cyclic = app.add_subcommand("cyclic-check", "Cyclic completion identities for plane partitions");
  cyclic->add_option("--boxes", cyc_boxes, "Single plane partition as a JSON box list");
  cyclic->add_option("--n-max", cyc_nmax, "Check every plane partition with 1 <= n <= n-max")
      ->check(CLI::NonNegativeNumber);

  SuiteOptions suite_options;
  suite_options.threads = std::max(2u, std::thread::hardware_concurrency());
  std::string suite_orientation;
  auto* suite = app.add_subcommand("suite", "Run every acceptance check");
  suite->add_option("--only", suite_options.only, "Run only these groups")
      ->check(CLI::IsMember(dt4::suite_groups()));
  suite->add_option("--orientation", suite_orientation, "Orientation JSON used by the orientation check");
  suite->add_option("--threads", suite_options.threads, "Threads for the determinism check")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    cfg.format = parse_format(format);
    if (max_n >= 0) cfg.max_n = max_n;
    if (*liqin) return cmd_liqin(cfg.format);
    if (*chi) return cmd_chi(context, e_sheaf, f_sheaf, cfg.format);
    if (*vdim) return cmd_vdim(n_points, h02, cfg.format);
    if (*partitions) return cmd_partitions(dim, size, counts, cfg, cfg.format);
    if (*vertex) {
      cfg.subcommand = "vertex";
      return cmd_vertex(boxes, cfg, cfg.format);
    }
    if (*series) {
      cfg.subcommand = "dt4-series";
      if (print_config) {
        std::cout << to_json(cfg).dump(2) << "\n";
        return 0;
      }
      return cmd_dt4_series(cfg, breakdown);
    }
    if (*goettsche) return cmd_goettsche(euler, g_nmax, g_oracle, cfg.format);
    if (*tstar) return cmd_tstar(c_slots, t_euler, cfg.format);
    if (*cyclic) return cmd_cyclic(cyc_boxes, cyc_nmax, cfg.format);
    if (*suite) {
      if (!suite_orientation.empty()) suite_options.orientation = suite_orientation;
      return cmd_suite(suite_options, cfg.format);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::InvalidArgument: return kExitUsage;
      case ErrorKind::BoundExceeded: return kExitBound;
      case ErrorKind::CheckFailed: return kExitMismatch;
      default: return kExitDomain;
    }
  }
  return kExitUsage;
}
