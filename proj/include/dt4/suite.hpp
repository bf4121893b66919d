#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dt4 {

struct CheckResult {
  int number = 0;
  std::string group;  // selector for --only
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double time_limit = 0;  // 0: untimed
};

struct SuiteOptions {
  std::vector<std::string> only;            // empty: every group
  std::optional<std::string> orientation;   // JSON file for the orientation check
  int threads = 4;                          // multi-thread side of the determinism check
};

// Groups in run order.
const std::vector<std::string>& suite_groups();

std::vector<CheckResult> run_suite(const SuiteOptions& options);

// "PASS [1] liqin: ..." style line.
std::string format_result(const CheckResult& r);

}  // namespace dt4
