#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uamasp/ast.hpp"
#include "uamasp/ground_program.hpp"
#include "uamasp/solver.hpp"

namespace uamasp {

enum class OutcomeKind { Detour, RoundTrip };

/// Placement of one agent: `agent=U-V:WP`.
struct Pin {
  std::int64_t agent = 0;
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t waypoint = 0;
  friend bool operator==(const Pin&, const Pin&) = default;
};

Pin parse_pin(std::string_view text);
std::string format_pin(const Pin& pin);

struct Scenario {
  std::string name;
  std::string environment_file;
  std::string agents_file;
  std::string query_file;
  Program environment;
  Program agents;
  Program query;
  OutcomeKind kind = OutcomeKind::Detour;
  std::vector<Pin> pins;

  Program combined() const;
};

/// Programs shipped with the library, keyed by file stem (env_info, query01, ...).
const std::vector<std::pair<std::string, std::string>>& embedded_programs();
const std::string& embedded_program(std::string_view stem);

std::vector<std::string> builtin_scenario_names();

/// query01..query04 pair the environment with agent_info1, query05 with
/// agent_info2. Throws ScenarioError for unknown names.
Scenario builtin_scenario(std::string_view name);

/// Replaces the `loc` placement choice and its distinctness constraint by
/// facts. Pins must cover exactly the agents the choice ranges over, stay in
/// the allowed waypoints, and be pairwise distinct. Throws ScenarioError.
Program pin_program(const Program& environment, const Program& agents, const std::vector<Pin>& pins);
Scenario pin_locations(const Scenario& s, const std::vector<Pin>& pins);

struct QueryRun {
  GroundProgram program;
  SolveResult result;
};

QueryRun run_query(const Scenario& s, const SolveOptions& options = {});

}  // namespace uamasp
