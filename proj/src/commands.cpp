#include "uamasp/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "uamasp/error.hpp"
#include "uamasp/format.hpp"
#include "uamasp/grounder.hpp"
#include "uamasp/json_io.hpp"
#include "uamasp/parser.hpp"
#include "uamasp/scenario.hpp"

namespace uamasp {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::vector<Pin> parse_pins(const std::vector<std::string>& pins) {
  std::vector<Pin> out;
  for (const auto& p : pins) out.push_back(parse_pin(p));
  return out;
}

int exit_code(SolveStatus s) { return s == SolveStatus::Satisfiable ? kExitSatisfiable : kExitUnsatisfiable; }

struct ScenarioRun {
  Scenario scenario;
  QueryRun run;
};

ScenarioRun run_scenario(const ScenarioCommand& c) {
  Scenario s = builtin_scenario(c.name);
  auto pins = parse_pins(c.pins);
  if (!pins.empty()) s = pin_locations(s, pins);
  SolveOptions options;
  options.max_models = c.max_models;
  QueryRun run = run_query(s, options);
  return {std::move(s), std::move(run)};
}

std::string indent(const std::string& block) {
  std::string out;
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) out += "  " + line + "\n";
  return out;
}

}  // namespace

int cmd_solve(const SolveCommand& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.files.empty()) throw Error("no input files");
    Program program;
    for (const auto& file : c.files) {
      std::string source = read_file(file);
      try {
        program.append(parse_program(source));
      } catch (const Error& e) {
        throw Error(file + ":" + e.what());
      }
    }
    auto pins = parse_pins(c.pins);
    if (!pins.empty()) program = pin_program(Program{}, program, pins);
    GroundProgram g = ground(program);
    if (c.dump_ground) {
      out << dump_ground_program(g);
      return kExitHelp;
    }
    SolveOptions options;
    options.max_models = c.max_models;
    SolveResult r = solve(g, options);
    out << banner() << "\n";
    out << "Reading from " << c.files.front() << " ...\n";
    out << "Solving...\n";
    out << format_result(r);
    return exit_code(r.status);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

nlohmann::json scenario_report(const ScenarioCommand& c) {
  auto [s, run] = run_scenario(c);
  nlohmann::json models = nlohmann::json::array();
  for (std::size_t i = 0; i < run.result.models.size(); ++i) {
    const auto& m = run.result.models[i];
    nlohmann::json model = {{"id", i + 1},
                            {"atoms", atoms_json(m.projected)},
                            {"outcome", to_json(extract_outcome(s, run.program, m))}};
    if (c.validate) model["validation"] = to_json(validate_answer_set(run.program, m, i + 1));
    models.push_back(std::move(model));
  }
  nlohmann::json pins = nlohmann::json::array();
  for (const auto& p : s.pins) pins.push_back(format_pin(p));
  return {{"schema_version", kSchemaVersion},
          {"scenario", s.name},
          {"files", {s.environment_file, s.agents_file, s.query_file}},
          {"pins", pins},
          {"status", status_text(run.result.status)},
          {"exhausted", run.result.exhausted},
          {"models", models}};
}

int cmd_scenario_run(const ScenarioCommand& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.json) {
      auto report = scenario_report(c);
      out << report.dump(2) << "\n";
      return report["status"] == "SATISFIABLE" ? kExitSatisfiable : kExitUnsatisfiable;
    }
    auto [s, run] = run_scenario(c);
    out << "scenario: " << s.name << "\n";
    out << "files: " << s.environment_file << " " << s.agents_file << " " << s.query_file << "\n";
    std::string pins;
    for (const auto& p : s.pins) pins += (pins.empty() ? "" : " ") + format_pin(p);
    out << "pins: " << (pins.empty() ? "none" : pins) << "\n";
    out << "status: " << status_text(run.result.status) << "\n";
    out << "models: " << run.result.models.size() << (run.result.exhausted ? " (exhaustive)" : " (bound reached)")
        << "\n";
    for (std::size_t i = 0; i < run.result.models.size(); ++i) {
      const auto& m = run.result.models[i];
      out << "model " << i + 1 << ":\n";
      out << indent(render_outcome(extract_outcome(s, run.program, m)));
      if (c.validate) out << indent(render_validation(validate_answer_set(run.program, m, i + 1)));
    }
    return exit_code(run.result.status);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_scenario_list(std::ostream& out) {
  for (const auto& name : builtin_scenario_names()) {
    Scenario s = builtin_scenario(name);
    out << name << ": " << s.environment_file << " " << s.agents_file << " " << s.query_file << "\n";
  }
  return kExitHelp;
}

}  // namespace uamasp
