#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "uamasp/ground_program.hpp"
#include "uamasp/network.hpp"
#include "uamasp/scenario.hpp"
#include "uamasp/solver.hpp"

namespace uamasp {

using AgentStep = std::pair<std::int64_t, std::int64_t>;
using RoundTrip = std::tuple<std::int64_t, std::int64_t, std::int64_t>;  // agent, target, step

struct DetourOutcome {
  std::set<std::int64_t> covered;
  std::set<std::int64_t> uncovered;
  std::set<AgentStep> detour_requests;
  std::set<AgentStep> route_changes;
  friend bool operator==(const DetourOutcome&, const DetourOutcome&) = default;
};

struct RoundTripOutcome {
  std::set<std::int64_t> ahead;
  std::set<std::int64_t> covered_by_uatm2;
  std::set<std::int64_t> covered_by_other;
  std::set<RoundTrip> round_requests;
  std::set<RoundTrip> round_routes;
  friend bool operator==(const RoundTripOutcome&, const RoundTripOutcome&) = default;
};

using Outcome = std::variant<DetourOutcome, RoundTripOutcome>;

DetourOutcome extract_detour(const std::vector<GroundAtom>& atoms);
RoundTripOutcome extract_round_trip(const std::vector<GroundAtom>& atoms);
Outcome extract_outcome(OutcomeKind kind, const std::vector<GroundAtom>& atoms);
Outcome extract_outcome(const Scenario& s, const GroundProgram& g, const AnswerSet& m);

std::vector<GroundAtom> model_atoms(const GroundProgram& g, const AnswerSet& m);

struct AgentSnapshot {
  std::int64_t agent = 0;
  std::int64_t step = 0;
  CorridorKey corridor{};
  std::int64_t waypoint = 0;
  std::set<CorridorKey> plan;  // plan edges at `step`
  std::optional<std::int64_t> target;
};

/// One snapshot per loc atom of the model, ordered by agent.
std::vector<AgentSnapshot> agent_snapshots(const std::vector<GroundAtom>& atoms);

}  // namespace uamasp
