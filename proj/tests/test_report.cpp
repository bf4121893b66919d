#include <doctest.h>

#include "dt4/error.hpp"
#include "dt4/report.hpp"

using namespace dt4;

TEST_CASE("partition JSON and ids") {
  const DPartition p(4, {{0, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(to_json(p).dump() == "[[0,0,0,0],[0,1,0,0]]");
  CHECK(partition_from_id(p.id()) == p);
  CHECK(partition_from_id("[]") == DPartition::empty(4));
  CHECK(partition_from_json(4, json::parse("[[0,1,0,0],[0,0,0,0]]")) == p);
  CHECK_THROWS_AS(partition_from_id("[[0,1,0,0],[0,0,0,0]]"), Error);
  CHECK_THROWS_AS(partition_from_id("not json"), Error);
  for (int n = 0; n <= 4; ++n)
    for (const auto& q : enumerate(4, n)) CHECK(partition_from_id(q.id()) == q);
}

TEST_CASE("orientation JSON") {
  OrientationData o;
  o.set("[[0,0,0,0]]", -1);
  o.set("[[0,0,0,0],[1,0,0,0]]", 1);
  const json j = to_json(o);
  CHECK(orientation_from_json(j).overrides() == o.overrides());
  CHECK_THROWS_AS(orientation_from_json(json::parse(R"({"[[0,0,0,0]]": 2})")), Error);
  CHECK_THROWS_AS(orientation_from_json(json::parse(R"({"[[1,0,0,0]]": 1})")), Error);
  CHECK_THROWS_AS(orientation_from_json(json::parse(R"([1, -1])")), Error);
  CHECK_THROWS_AS(orientation_from_json(json::parse(R"({"[[0,0,0,0]]": "1"})")), Error);
}

TEST_CASE("context and sheaf JSON") {
  const auto x = liqin_fourfold();
  const json cj = context_to_json(x);
  CHECK(cj == json::parse(R"({"dims": [1, 4], "divisor": [2, 5]})"));
  const auto back = context_from_json(cj);
  CHECK(back.ambient() == x.ambient());
  CHECK(back.todd() == x.todd());
  CHECK(context_from_json(json::parse(R"({"dims": [2]})")).dimension() == 2);
  CHECK_THROWS_AS(context_from_json(json::parse(R"({"dims": []})")), Error);

  const SheafClass e = liqin_sheaf(x, 0, 1);
  CHECK(sheaf_from_json(x, sheaf_to_json(e)) == e);
  CHECK(sheaf_from_json(x, json::parse(R"({"lines": [[-1, 1], [1, 0]]})")) == e);
  CHECK_THROWS_AS(sheaf_from_json(x, json::parse(R"({"lines": [[1, 2, 3]]})")), Error);
}

TEST_CASE("run configuration round trip") {
  RunConfig c;
  c.subcommand = "dt4-series";
  c.n_max = 5;
  c.torus = "3,7,19,-29";
  c.format = OutputFormat::Json;
  c.check_oracle = true;
  c.threads = 8;
  c.max_n = 9;
  CHECK(run_config_from_json(to_json(c)) == c);
  RunConfig d;
  d.subcommand = "vertex";
  CHECK(run_config_from_json(to_json(d)) == d);
  CHECK(run_config_from_json(json::parse(to_json(c).dump())) == c);
  CHECK_THROWS_AS(run_config_from_json(json::parse(R"({"subcommand": 3})")), Error);
}

TEST_CASE("formats") {
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(to_string(OutputFormat::Csv) == "csv");
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("series JSON") {
  const auto s = TorusParams::parse("1,2,3,-6");
  const auto series = dt4_degree0_series(1, s, OrientationData{}, 1);
  const json j = to_json(series, s, true);
  CHECK(j["series"] == json::parse(R"(["1", "-5/3"])"));
  CHECK(j.contains("levels"));
  CHECK_FALSE(to_json(series, s, false).contains("levels"));
}
