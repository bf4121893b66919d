#include "dt4/report.hpp"

#include "dt4/error.hpp"

namespace dt4 {

json to_json(const DPartition& p) {
  json boxes = json::array();
  for (const Box& b : p.boxes()) {
    json t = json::array();
    for (int i = 0; i < p.dim(); ++i) t.push_back(b[static_cast<std::size_t>(i)]);
    boxes.push_back(std::move(t));
  }
  return boxes;
}

DPartition partition_from_json(int dim, const json& boxes) {
  if (!boxes.is_array()) throw Error(ErrorKind::InvalidArgument, "partition must be an array of boxes");
  std::vector<Box> out;
  for (const auto& t : boxes) {
    if (!t.is_array() || static_cast<int>(t.size()) != dim)
      throw Error(ErrorKind::InvalidArgument, "box must be an array of " + std::to_string(dim) + " integers");
    Box b{0, 0, 0, 0};
    for (int i = 0; i < dim; ++i) {
      if (!t[static_cast<std::size_t>(i)].is_number_integer())
        throw Error(ErrorKind::InvalidArgument, "box coordinates must be integers");
      b[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)].get<int>();
    }
    out.push_back(b);
  }
  return DPartition(dim, std::move(out));
}

DPartition partition_from_id(const std::string& id) {
  json j;
  try {
    j = json::parse(id);
  } catch (const json::exception&) {
    throw Error(ErrorKind::InvalidArgument, "malformed partition identifier '" + id + "'");
  }
  if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "malformed partition identifier '" + id + "'");
  const int dim = j.empty() ? 4 : static_cast<int>(j.front().size());
  DPartition p = partition_from_json(dim, j);
  if (p.id() != id) throw Error(ErrorKind::InvalidArgument, "partition identifier '" + id + "' is not canonical");
  return p;
}

json to_json(const WeightMultiset& w) {
  json out = json::array();
  for (const auto& [form, m] : w.weights())
    for (int i = 0; i < m; ++i) out.push_back(form.reduced());
  return out;
}

json to_json(const SeriesTerm& term) {
  return json{{"partition", to_json(term.point.partition)},
              {"id", term.point.partition.id()},
              {"E1", to_json(term.point.e1)},
              {"E2", to_json(term.point.e2)},
              {"orientation", term.point.orientation},
              {"contribution", to_string(term.contribution)}};
}

json to_json(const Dt4Series& series, const TorusParams& s, bool breakdown) {
  json coeffs = json::array();
  for (const auto& c : series.coefficients) coeffs.push_back(to_string(c));
  json out{{"s", s.point().to_string()}, {"series", coeffs}};
  if (breakdown) {
    json levels = json::array();
    for (std::size_t n = 0; n < series.breakdown.size(); ++n) {
      json points = json::array();
      for (const auto& t : series.breakdown[n]) points.push_back(to_json(t));
      levels.push_back(json{{"n", n}, {"coefficient", to_string(series.coefficients[n])}, {"fixed_points", points}});
    }
    out["levels"] = levels;
  }
  return out;
}

json to_json(const CyclicReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows)
    rows.push_back(json{{"degree", r.degree},
                        {"four_fold", r.four_fold.to_string()},
                        {"predicted", r.predicted.to_string()},
                        {"equal", r.equal}});
  return json{{"partition", to_json(report.partition)}, {"rows", rows}, {"passed", report.passed}};
}

OrientationData orientation_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "orientation data must be a JSON object");
  OrientationData o;
  for (const auto& [key, value] : j.items()) {
    const DPartition p = partition_from_id(key);
    if (p.dim() != 4) throw Error(ErrorKind::InvalidArgument, "orientation key '" + key + "' is not a solid partition");
    if (!value.is_number_integer() || (value.get<int>() != 1 && value.get<int>() != -1))
      throw Error(ErrorKind::InvalidArgument, "orientation for '" + key + "' must be 1 or -1");
    o.set(key, value.get<int>());
  }
  return o;
}

json to_json(const OrientationData& o) {
  json out = json::object();
  for (const auto& [id, sign] : o.overrides()) out[id] = sign;
  return out;
}

json context_to_json(const VarietyContext& ctx) {
  json out{{"dims", ctx.ambient().dims()}};
  if (ctx.divisor()) out["divisor"] = ctx.divisor_degrees();
  return out;
}

VarietyContext context_from_json(const json& j) {
  try {
    const auto dims = j.at("dims").get<std::vector<int>>();
    if (j.contains("divisor")) return VarietyContext::hypersurface(dims, j.at("divisor").get<std::vector<int>>());
    return VarietyContext::product_projective(dims);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed context: ") + e.what());
  }
}

json sheaf_to_json(const SheafClass& s) {
  json terms = json::array();
  for (const auto& [m, c] : s.ch().terms()) terms.push_back(json::array({m, to_string(c)}));
  return json{{"ch", terms}};
}

SheafClass sheaf_from_json(const VarietyContext& ctx, const json& j) {
  try {
    if (j.contains("lines")) {
      CohClass ch(ctx.ambient());
      for (const auto& line : j.at("lines")) ch += ch_line(ctx.line_class(line.get<std::vector<int>>())).ch();
      return SheafClass(ch);
    }
    CohClass ch(ctx.ambient());
    for (const auto& term : j.at("ch")) {
      const auto m = term.at(0).get<Monomial>();
      if (!ctx.ambient().admissible(m)) throw Error(ErrorKind::InvalidArgument, "monomial outside the ring");
      const json& c = term.at(1);
      ch.add_term(m, c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
    }
    return SheafClass(ch);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed sheaf class: ") + e.what());
  }
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
  }
  return "text";
}

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw Error(ErrorKind::InvalidArgument, "unknown output format '" + s + "'");
}

json to_json(const RunConfig& c) {
  json out{{"subcommand", c.subcommand},   {"n_max", c.n_max},
           {"s", c.torus},                 {"orientation", c.orientation},
           {"format", to_string(c.format)}, {"check_oracle", c.check_oracle},
           {"threads", c.threads}};
  out["max_n"] = c.max_n ? json(*c.max_n) : json(nullptr);
  return out;
}

RunConfig run_config_from_json(const json& j) {
  RunConfig c;
  try {
    c.subcommand = j.at("subcommand").get<std::string>();
    c.n_max = j.at("n_max").get<int>();
    c.torus = j.at("s").get<std::string>();
    c.orientation = j.at("orientation").get<std::string>();
    c.format = parse_format(j.at("format").get<std::string>());
    c.check_oracle = j.at("check_oracle").get<bool>();
    c.threads = j.at("threads").get<int>();
    if (!j.at("max_n").is_null()) c.max_n = j.at("max_n").get<int>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed run config: ") + e.what());
  }
  return c;
}

}  // namespace dt4
