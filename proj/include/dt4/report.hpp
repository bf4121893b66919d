#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "dt4/chow.hpp"
#include "dt4/partitions.hpp"
#include "dt4/vertex.hpp"

namespace dt4 {

using nlohmann::json;

json to_json(const DPartition& p);
DPartition partition_from_json(int dim, const json& boxes);
// Parses a DPartition::id() string back; d is inferred from the tuple length
// (4 for the empty partition).
DPartition partition_from_id(const std::string& id);

json to_json(const WeightMultiset& w);  // reduced triples, repeated by multiplicity
json to_json(const SeriesTerm& term);
json to_json(const Dt4Series& series, const TorusParams& s, bool breakdown);
json to_json(const CyclicReport& report);

// {"<partition id>": 1 | -1, ...}; throws Error(InvalidArgument) on
// malformed keys or values.
OrientationData orientation_from_json(const json& j);
json to_json(const OrientationData& o);

// {"dims": [1, 4], "divisor": [2, 5]}; "divisor" is optional.
json context_to_json(const VarietyContext& ctx);
VarietyContext context_from_json(const json& j);

// {"ch": [[[e1, e2, ...], "coeff"], ...]} or {"lines": [[a, b], ...]} (sum of
// line bundles with the given divisor coefficients).
json sheaf_to_json(const SheafClass& s);
SheafClass sheaf_from_json(const VarietyContext& ctx, const json& j);

enum class OutputFormat { Text, Json, Csv };
std::string to_string(OutputFormat f);
OutputFormat parse_format(const std::string& s);

struct RunConfig {
  std::string subcommand;
  int n_max = 0;
  std::string torus = "1,10,100,-111";
  std::string orientation = "default";  // or a file path
  OutputFormat format = OutputFormat::Text;
  bool check_oracle = false;
  int threads = 1;
  std::optional<int> max_n;  // bound override for d = 4

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

json to_json(const RunConfig& c);
RunConfig run_config_from_json(const json& j);

}  // namespace dt4
