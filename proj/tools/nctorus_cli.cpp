#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nctorus/scenario.hpp"

namespace {

using nctorus::scenario::json;

int emit(const nctorus::scenario::Outcome& outcome, const std::string& out_path, bool pretty) {
  const std::string text = nctorus::scenario::render(outcome.body, pretty) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << text;
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connections, transports and Wilson lines on the noncommutative torus"};
  std::string scenario_path;
  std::string builtin_name;
  std::string out_path;
  bool pretty = false;
  auto* scenario_opt = app.add_option("--scenario", scenario_path, "Scenario JSON file");
  auto* builtin_opt = app.add_option("--builtin", builtin_name, "Built-in scenario")
                          ->check(CLI::IsMember({"paper-scalar", "paper-4x4", "paper-cover",
                                                 "paper-infinite"}));
  scenario_opt->excludes(builtin_opt);
  app.add_option("--out", out_path, "Report path (default: stdout)");
  app.add_flag("--pretty", pretty, "Indent the report");
  CLI11_PARSE(app, argc, argv);

  namespace sc = nctorus::scenario;
  json scenario;
  if (!builtin_name.empty()) {
    scenario = sc::builtin(builtin_name);
  } else if (!scenario_path.empty()) {
    std::ifstream in(scenario_path, std::ios::binary);
    if (!in) {
      return emit({sc::exit_validation,
                   sc::error_body(nctorus::ErrorCode::InvalidScenario, "cannot read " + scenario_path)},
                  out_path, pretty);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      scenario = json::parse(buffer.str());
    } catch (const json::parse_error& e) {
      return emit({sc::exit_validation, sc::error_body(nctorus::ErrorCode::InvalidScenario, e.what())},
                  out_path, pretty);
    }
  } else {
    std::cerr << "one of --scenario or --builtin is required\n" << app.help();
    return sc::exit_validation;
  }
  return emit(sc::run(scenario), out_path, pretty);
}
