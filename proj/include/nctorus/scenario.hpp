#pragma once

// JSON scenario runner behind the command-line tool. A scenario names one
// command and carries every input it needs; the report echoes the scenario
// under "input" and puts the outcome under "result".

#include <algorithm>
#include <array>
#include <initializer_list>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "nctorus/serialization.hpp"

namespace nctorus::scenario {

using json = nlohmann::json;

inline constexpr int schema_version = 1;
inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 2;
inline constexpr int exit_domain = 3;

inline constexpr std::array<std::string_view, 7> commands = {
    "curvature", "flat", "transport", "classify", "wilson", "independence", "infinite-wilson"};

inline constexpr std::array<std::string_view, 4> builtin_names = {
    "paper-scalar", "paper-4x4", "paper-cover", "paper-infinite"};

struct Scenario {
  json raw;
  std::string command;
  TorusParams params{0.5};
  json covering;
  json connection;
  std::vector<WeightVector> paths;
  json options;  // the "params" block
};

inline Scenario parse(const json& j) {
  using json_io::field;
  using json_io::schema_error;
  if (!j.is_object()) schema_error("scenario must be a JSON object");
  if (json_io::integer(field(j, "v"), "v") != schema_version) {
    schema_error("unsupported scenario version, expected \"v\": 1");
  }
  Scenario s;
  s.raw = j;
  const json& command = field(j, "command");
  if (!command.is_string()) schema_error("\"command\" must be a string");
  s.command = command.get<std::string>();
  if (std::find(commands.begin(), commands.end(), s.command) == commands.end()) {
    schema_error("unknown command \"" + s.command + "\"");
  }
  s.params = TorusParams(json_io::number(field(j, "theta"), "theta"));
  s.covering = j.value("covering", json{{"degrees", {2, 2}}});
  s.options = j.value("params", json::object());
  if (!s.options.is_object()) schema_error("\"params\" must be an object");
  if (j.contains("paths")) {
    const json& paths = j.at("paths");
    if (!paths.is_array()) schema_error("\"paths\" must be an array of weights");
    for (const auto& p : paths) s.paths.push_back(json_io::weight_from_json(p));
  }

  const auto needs = [&](std::initializer_list<std::string_view> list) {
    return std::find(list.begin(), list.end(), s.command) != list.end();
  };
  if (needs({"curvature", "flat", "transport", "wilson", "independence"})) {
    s.connection = field(j, "connection");
  }
  if (needs({"transport", "classify", "independence"}) && s.paths.empty()) {
    schema_error("command \"" + s.command + "\" needs a non-empty \"paths\" list");
  }
  if (needs({"transport"})) json_io::number(field(s.options, "tau"), "params.tau");
  if (needs({"wilson", "independence", "infinite-wilson"})) field(s.options, "deck");
  if (needs({"infinite-wilson"})) {
    json_io::number(field(s.options, "c_u"), "params.c_u");
    json_io::number(field(s.options, "c_v"), "params.c_v");
  }
  return s;
}

inline std::array<std::int64_t, 2> deck_pair(const json& j) {
  if (!j.is_array() || j.size() != 2) json_io::schema_error("\"deck\" must be [p, q]");
  return {json_io::integer(j[0], "deck[0]"), json_io::integer(j[1], "deck[1]")};
}

inline json execute(const Scenario& s) {
  using namespace json_io;
  const auto conn = [&] { return connection_from_json(s.connection, s.params); };
  const auto spec = [&] { return covering_from_json(s.covering, s.params); };

  if (s.command == "curvature") {
    const Connection c = conn();
    const auto form = curvature_form(c);
    return {{"curvature", matrix_to_json(form, two_form_to_json)},
            {"symbolically_zero", symbolically_zero(form)},
            {"commutator", matrix_to_json(curvature_commutator(c, WeightVector::u(), WeightVector::v()),
                                          element_to_json)}};
  }
  if (s.command == "flat") return {{"flat", is_flat(conn())}};
  if (s.command == "transport") {
    const Connection c = conn();
    const double tau = s.options.at("tau").get<double>();
    json out = json::array();
    for (const auto& w : s.paths) out.push_back(transport_to_json(transport(c, w, tau)));
    return {{"transports", out}};
  }
  if (s.command == "classify") {
    const CoveringSpec cs = spec();
    json out = json::array();
    for (const auto& w : s.paths) out.push_back(path_report_to_json(classify_path(cs, w)));
    return {{"paths", out}};
  }
  if (s.command == "wilson") {
    const CoveringSpec cs = spec();
    const auto [p, q] = deck_pair(s.options.at("deck"));
    const DeckElement g = cs.deck(p, q);
    const auto t = wilson(cs, g, conn());
    json out = {{"deck", deck_to_json(g)}, {"transport", transport_to_json(t)}};
    if (t.rank() == 1) out["value"] = complex_to_json(t.matrix()(0, 0));
    return out;
  }
  if (s.command == "independence") {
    const CoveringSpec cs = spec();
    const auto [p, q] = deck_pair(s.options.at("deck"));
    const DeckElement g = cs.deck(p, q);
    const auto report = check_path_independence(cs, g, conn(), s.paths);
    json transports = json::array();
    for (const auto& t : report.transports) transports.push_back(transport_to_json(t));
    return {{"deck", deck_to_json(g)},
            {"max_distance", report.max_distance},
            {"certified", report.certified},
            {"transports", transports}};
  }
  // infinite-wilson
  const auto [p, q] = deck_pair(s.options.at("deck"));
  const double c_u = s.options.at("c_u").get<double>();
  const double c_v = s.options.at("c_v").get<double>();
  const std::string gauge = s.options.value("gauge", std::string("scalar"));
  if (gauge == "scalar") {
    return {{"deck", json::array({p, q})}, {"value", complex_to_json(wilson_relation(p, q, c_u, c_v))}};
  }
  if (gauge == "rotation") {
    const auto r = wilson_relation(p, q, rotation_gauge(c_u, c_v));
    return {{"deck", json::array({p, q})},
            {"matrix", complex_matrix_to_json(r.value)},
            {"residual", r.residual}};
  }
  schema_error("params.gauge must be \"scalar\" or \"rotation\"");
}

/// Rounds to 15 significant digits; also maps -0 to 0.
inline double round_significant(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

inline void round_numbers(json& j) {
  if (j.is_number_float()) {
    j = round_significant(j.get<double>());
  } else if (j.is_structured()) {
    for (auto& child : j) round_numbers(child);
  }
}

struct Outcome {
  int exit_code = exit_ok;
  json body;
};

inline json error_body(ErrorCode code, const std::string& message) {
  return {{"error", std::string(to_string(code))}, {"message", message}};
}

/// Validates and runs a scenario. Never throws for bad input: failures come
/// back as an error body with exit code 2 (validation) or 3 (math domain).
inline Outcome run(const json& scenario_json) {
  try {
    const Scenario s = parse(scenario_json);
    json result = execute(s);
    round_numbers(result);
    return {exit_ok,
            {{"v", schema_version},
             {"command", s.command},
             {"input", s.raw},
             {"result", std::move(result)},
             {"metadata", {{"tool", "nctorus"}, {"version", "1.0.0"}}}}};
  } catch (const Error& e) {
    return {is_validation_error(e.code()) ? exit_validation : exit_domain,
            error_body(e.code(), e.what())};
  } catch (const json::exception& e) {
    return {exit_validation, error_body(ErrorCode::InvalidScenario, e.what())};
  }
}

inline json builtin(std::string_view name) {
  const double theta = 0.3819660113;
  const TorusParams params(theta);
  json s = {{"v", schema_version}, {"theta", theta}, {"covering", {{"degrees", {2, 2}}}}};
  if (name == "paper-scalar") {
    s["command"] = "wilson";
    s["connection"] = json_io::connection_to_json(presets::scalar_flat(params, 0.25, 0.1));
    s["params"] = {{"c_u", 0.25}, {"c_v", 0.1}, {"deck", {1, 0}}};
  } else if (name == "paper-4x4") {
    s["command"] = "wilson";
    s["connection"] = json_io::connection_to_json(presets::rotation_pair(params, 0.125, 1.0 / 6.0));
    s["params"] = {{"c_u", 0.125}, {"c_v", 1.0 / 6.0}, {"deck", {1, 0}}};
  } else if (name == "paper-cover") {
    s["command"] = "classify";
    s["paths"] = {{1, 0}, {0, 1}, {1, 2}, {2, 0}};
  } else if (name == "paper-infinite") {
    s["command"] = "infinite-wilson";
    s["params"] = {{"c_u", 0.25}, {"c_v", 0.1}, {"deck", {1, 0}}};
  } else {
    json_io::schema_error("unknown builtin scenario \"" + std::string(name) + "\"");
  }
  return s;
}

inline std::string render(const json& body, bool pretty) {
  return pretty ? body.dump(2) : body.dump();
}

}  // namespace nctorus::scenario
