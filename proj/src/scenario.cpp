#include "uamasp/scenario.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <tuple>

#include "uamasp/error.hpp"
#include "uamasp/grounder.hpp"
#include "uamasp/parser.hpp"

namespace uamasp {

namespace {

constexpr const char* kPlacement = "loc";

bool is_placement_choice(const Statement& s) {
  const auto* choice = std::get_if<ChoiceRule>(&s.node);
  if (!choice || choice->elements.empty()) return false;
  return std::all_of(choice->elements.begin(), choice->elements.end(), [](const ChoiceElement& e) {
    return e.head.predicate == kPlacement && e.head.arity() == 5;
  });
}

// `:- loc(...), loc(...), X != Y.` and nothing else
bool is_distinctness_constraint(const Statement& s) {
  const auto* c = std::get_if<Constraint>(&s.node);
  if (!c) return false;
  int placements = 0;
  bool inequality = false;
  for (const auto& lit : c->body) {
    if (lit.kind == Literal::Kind::Positive && lit.atom.predicate == kPlacement) {
      ++placements;
    } else if (lit.kind == Literal::Kind::Comparison && lit.comparison.op == CmpOp::Ne) {
      inequality = true;
    } else {
      return false;
    }
  }
  return placements >= 2 && inequality;
}

struct Slot {
  std::int64_t step = 0;
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> allowed;  // from, to, waypoint
};

std::int64_t int_arg(const GroundAtom& a, std::size_t i) {
  if (!a.args[i].is_integer()) throw ScenarioError("placement atom " + a.to_string() + " has a symbolic argument");
  return a.args[i].as_integer();
}

std::map<std::int64_t, Slot> placement_slots(const Program& environment, const Program& agents) {
  Program p = environment;
  p.append(agents);
  GroundProgram g = ground(p);
  std::map<std::int64_t, Slot> slots;
  for (const auto& r : g.rules) {
    const auto* choice = std::get_if<GroundChoiceRule>(&r);
    if (!choice) continue;
    for (const auto& e : choice->elements) {
      const GroundAtom& a = g.atoms.atom(e.head);
      if (a.predicate != kPlacement || a.args.size() != 5) continue;
      Slot& slot = slots[int_arg(a, 0)];
      slot.step = int_arg(a, 1);
      slot.allowed.emplace(int_arg(a, 2), int_arg(a, 3), int_arg(a, 4));
    }
  }
  return slots;
}

std::string agent_list(const std::map<std::int64_t, Slot>& slots) {
  std::string out;
  for (const auto& [agent, slot] : slots) {
    if (!out.empty()) out += ", ";
    out += std::to_string(agent);
  }
  return "{" + out + "}";
}

Statement placement_fact(std::int64_t agent, std::int64_t step, const Pin& pin, SourcePos pos) {
  IntervalAtom atom{kPlacement,
                    {Term::integer(agent), Term::integer(step), Term::integer(pin.from), Term::integer(pin.to),
                     Term::integer(pin.waypoint)}};
  return Statement{Fact{std::move(atom)}, pos};
}

}  // namespace

Pin parse_pin(std::string_view text) {
  static const std::regex pattern(R"(\s*(\d+)\s*=\s*(\d+)\s*-\s*(\d+)\s*:\s*(\d+)\s*)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern)) {
    throw ScenarioError("invalid pin '" + std::string(text) + "', expected AGENT=U-V:WP");
  }
  try {
    return Pin{std::stoll(m[1].str()), std::stoll(m[2].str()), std::stoll(m[3].str()), std::stoll(m[4].str())};
  } catch (const std::out_of_range&) {
    throw ScenarioError("invalid pin '" + std::string(text) + "', number out of range");
  }
}

std::string format_pin(const Pin& pin) {
  return std::to_string(pin.agent) + "=" + std::to_string(pin.from) + "-" + std::to_string(pin.to) + ":" +
         std::to_string(pin.waypoint);
}

Program Scenario::combined() const {
  Program p = environment;
  p.append(agents);
  p.append(query);
  return p;
}

const std::string& embedded_program(std::string_view stem) {
  for (const auto& [name, text] : embedded_programs()) {
    if (name == stem) return text;
  }
  throw ScenarioError("no embedded program named '" + std::string(stem) + "'");
}

std::vector<std::string> builtin_scenario_names() {
  return {"query01", "query02", "query03", "query04", "query05"};
}

Scenario builtin_scenario(std::string_view name) {
  auto names = builtin_scenario_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw ScenarioError("unknown scenario '" + std::string(name) + "'");
  }
  Scenario s;
  s.name = std::string(name);
  s.kind = name == "query05" ? OutcomeKind::RoundTrip : OutcomeKind::Detour;
  const std::string agents = s.kind == OutcomeKind::RoundTrip ? "agent_info2" : "agent_info1";
  s.environment_file = "env_info.lp";
  s.agents_file = agents + ".lp";
  s.query_file = s.name + ".lp";
  s.environment = parse_program(embedded_program("env_info"));
  s.agents = parse_program(embedded_program(agents));
  s.query = parse_program(embedded_program(s.name));
  return s;
}

Program pin_program(const Program& environment, const Program& agents, const std::vector<Pin>& pins) {
  if (std::none_of(agents.statements.begin(), agents.statements.end(), is_placement_choice)) {
    throw ScenarioError("program has no placement choice to pin");
  }
  const auto slots = placement_slots(environment, agents);

  std::map<std::int64_t, const Pin*> by_agent;
  for (const auto& pin : pins) {
    if (!slots.count(pin.agent)) {
      throw ScenarioError("agent " + std::to_string(pin.agent) + " is not placed by the choice; expected agents " +
                          agent_list(slots));
    }
    if (!by_agent.emplace(pin.agent, &pin).second) {
      throw ScenarioError("agent " + std::to_string(pin.agent) + " is pinned twice");
    }
  }
  if (by_agent.size() != slots.size()) {
    throw ScenarioError("pins must place exactly the agents " + agent_list(slots));
  }
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> taken;
  for (const auto& [agent, pin] : by_agent) {
    auto spot = std::make_tuple(pin->from, pin->to, pin->waypoint);
    if (!slots.at(agent).allowed.count(spot)) {
      throw ScenarioError("pin " + format_pin(*pin) + " is outside the waypoints allowed for agent " +
                          std::to_string(agent));
    }
    if (!taken.insert(spot).second) {
      throw ScenarioError("pin " + format_pin(*pin) + " shares its waypoint with another agent");
    }
  }

  Program out;
  for (const auto& s : agents.statements) {
    if (is_distinctness_constraint(s)) continue;
    if (!is_placement_choice(s)) {
      out.statements.push_back(s);
      continue;
    }
    for (const auto& [agent, pin] : by_agent) {
      out.statements.push_back(placement_fact(agent, slots.at(agent).step, *pin, s.pos));
    }
    by_agent.clear();
  }
  return out;
}

Scenario pin_locations(const Scenario& s, const std::vector<Pin>& pins) {
  Scenario pinned = s;
  pinned.agents = pin_program(s.environment, s.agents, pins);
  pinned.pins = pins;
  std::sort(pinned.pins.begin(), pinned.pins.end(), [](const Pin& a, const Pin& b) { return a.agent < b.agent; });
  return pinned;
}

QueryRun run_query(const Scenario& s, const SolveOptions& options) {
  QueryRun run;
  run.program = ground(s.combined());
  run.result = solve(run.program, options);
  return run;
}

}  // namespace uamasp
