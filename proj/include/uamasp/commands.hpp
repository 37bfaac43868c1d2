#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace uamasp {

inline constexpr int kExitHelp = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitSatisfiable = 10;
inline constexpr int kExitUnsatisfiable = 20;

struct SolveCommand {
  std::vector<std::string> files;
  std::size_t max_models = 1;  // 0 = all
  std::vector<std::string> pins;
  bool dump_ground = false;
};

/// Concatenates the files, grounds and solves. Prints the result block to
/// `out` and diagnostics to `err`. Returns 10/20 by status, 1 on error, and
/// 0 after --dump-ground (which prints the ground program and does not solve).
int cmd_solve(const SolveCommand& c, std::ostream& out, std::ostream& err);

struct ScenarioCommand {
  std::string name;
  std::vector<std::string> pins;
  std::size_t max_models = 1;
  bool validate = false;
  bool json = false;
};

/// Machine-readable report: status, models with projected atoms, typed
/// outcome and (when requested) validation. Throws uamasp::Error.
nlohmann::json scenario_report(const ScenarioCommand& c);

int cmd_scenario_run(const ScenarioCommand& c, std::ostream& out, std::ostream& err);
int cmd_scenario_list(std::ostream& out);

}  // namespace uamasp
