// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
// argv[1], when given, is the dt4 executable used for the end-to-end
// determinism comparison.
#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include "dt4/suite.hpp"

namespace {

bool capture(const std::string& command, std::string& out) {
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return false;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  return ::pclose(pipe) == 0;
}

// dt4-series JSON with the per-point breakdown, 1 thread vs 4 threads.
std::string cli_determinism(const std::string& exe, bool& ok) {
  const std::string base = "'" + exe + "' dt4-series --n-max 5 --breakdown --format json --threads ";
  std::string single, multi;
  const bool ran = capture(base + "1", single) && capture(base + "4", multi);
  ok = ran && !single.empty() && single == multi;
  if (!ran) return "cli run failed";
  return ok ? "cli n<=5 output byte-identical (" + std::to_string(single.size()) + " bytes)"
            : "cli output differs between 1 and 4 threads";
}

}  // namespace

int main(int argc, char** argv) {
  dt4::SuiteOptions options;
  auto results = dt4::run_suite(options);

  if (argc > 1) {
    for (auto& r : results) {
      if (r.group != "determinism") continue;
      bool ok = false;
      const std::string detail = cli_determinism(argv[1], ok);
      r.passed = r.passed && ok;
      r.detail += "; " + detail;
    }
  }

  int failed = 0;
  for (const auto& r : results) {
    std::cout << dt4::format_result(r) << '\n';
    if (!r.passed) ++failed;
  }
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << " of " << results.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
