#include "uamasp/outcome.hpp"

#include <map>

namespace uamasp {

namespace {

bool is(const GroundAtom& a, std::string_view predicate, std::size_t arity) {
  if (a.predicate != predicate || a.args.size() != arity) return false;
  for (const auto& v : a.args) {
    if (!v.is_integer()) return false;
  }
  return true;
}

std::int64_t at(const GroundAtom& a, std::size_t i) { return a.args[i].as_integer(); }

}  // namespace

std::vector<GroundAtom> model_atoms(const GroundProgram& g, const AnswerSet& m) {
  std::vector<GroundAtom> out;
  out.reserve(m.atoms.size());
  for (AtomId id : m.atoms) out.push_back(g.atoms.atom(id));
  return out;
}

DetourOutcome extract_detour(const std::vector<GroundAtom>& atoms) {
  DetourOutcome o;
  for (const auto& a : atoms) {
    if (is(a, "covered_by_uatm1", 1)) o.covered.insert(at(a, 0));
    else if (is(a, "uncovered_by_uatm1", 1)) o.uncovered.insert(at(a, 0));
    else if (is(a, "detour_request", 2)) o.detour_requests.emplace(at(a, 0), at(a, 1));
    else if (is(a, "change_route", 2)) o.route_changes.emplace(at(a, 0), at(a, 1));
  }
  return o;
}

RoundTripOutcome extract_round_trip(const std::vector<GroundAtom>& atoms) {
  RoundTripOutcome o;
  for (const auto& a : atoms) {
    if (is(a, "ahead_agents", 2)) o.ahead.insert(at(a, 0));
    else if (is(a, "covered_by_uatm2", 1)) o.covered_by_uatm2.insert(at(a, 0));
    else if (is(a, "covered_by_other", 1)) o.covered_by_other.insert(at(a, 0));
    else if (is(a, "round_request", 3)) o.round_requests.emplace(at(a, 0), at(a, 1), at(a, 2));
    else if (is(a, "round_route", 3)) o.round_routes.emplace(at(a, 0), at(a, 1), at(a, 2));
  }
  return o;
}

Outcome extract_outcome(OutcomeKind kind, const std::vector<GroundAtom>& atoms) {
  if (kind == OutcomeKind::RoundTrip) return extract_round_trip(atoms);
  return extract_detour(atoms);
}

Outcome extract_outcome(const Scenario& s, const GroundProgram& g, const AnswerSet& m) {
  return extract_outcome(s.kind, model_atoms(g, m));
}

std::vector<AgentSnapshot> agent_snapshots(const std::vector<GroundAtom>& atoms) {
  std::map<std::int64_t, AgentSnapshot> by_agent;
  for (const auto& a : atoms) {
    if (!is(a, "loc", 5)) continue;
    AgentSnapshot& s = by_agent[at(a, 0)];
    s.agent = at(a, 0);
    s.step = at(a, 1);
    s.corridor = {at(a, 2), at(a, 3)};
    s.waypoint = at(a, 4);
  }
  for (const auto& a : atoms) {
    if (is(a, "plan", 4)) {
      auto it = by_agent.find(at(a, 0));
      if (it != by_agent.end() && it->second.step == at(a, 1)) it->second.plan.emplace(at(a, 2), at(a, 3));
    } else if (is(a, "target", 3)) {
      auto it = by_agent.find(at(a, 0));
      if (it != by_agent.end() && it->second.step == at(a, 1)) it->second.target = at(a, 2);
    }
  }
  std::vector<AgentSnapshot> out;
  for (auto& [agent, s] : by_agent) out.push_back(std::move(s));
  return out;
}

}  // namespace uamasp
