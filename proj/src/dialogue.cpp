#include "uamasp/dialogue.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "uamasp/error.hpp"
#include "uamasp/format.hpp"
#include "uamasp/parser.hpp"

namespace uamasp {

namespace {

// The detour program hard-codes the congested corridor and its replacement route.
constexpr CorridorKey kDetourCorridor{2, 3};

std::string vp(std::int64_t v) { return "vp" + std::to_string(v); }

std::string corridor_text(std::int64_t from, std::int64_t to) { return vp(from) + " -> " + vp(to); }

Term substitute(const Term& t, const std::map<std::string, std::int64_t>& values) {
  if (t.kind() == Term::Kind::Variable) {
    auto it = values.find(t.name());
    return it == values.end() ? t : Term::integer(it->second);
  }
  if (t.kind() == Term::Kind::Binary) {
    return Term::binary(t.op(), substitute(t.left(), values), substitute(t.right(), values));
  }
  return t;
}

// Retargets `ahead_agents(A, T) :- loc(A, T, U, V, WP), loc(7, T, U, V, WP2), ...`
// to the given reference agent and corridor.
Program retarget_ahead(Program query, std::int64_t from, std::int64_t to, std::int64_t behind) {
  for (auto& s : query.statements) {
    auto* rule = std::get_if<Rule>(&s.node);
    if (!rule || rule->head.predicate != "ahead_agents") continue;
    std::map<std::string, std::int64_t> values;
    for (auto& element : rule->body) {
      auto* lit = std::get_if<Literal>(&element);
      if (!lit || lit->kind != Literal::Kind::Positive || lit->atom.predicate != "loc" || lit->atom.arity() != 5) {
        continue;
      }
      auto& args = lit->atom.args;
      if (args[0].kind() != Term::Kind::Integer) continue;
      args[0] = Term::integer(behind);
      if (args[2].kind() == Term::Kind::Variable) values[args[2].name()] = from;
      if (args[3].kind() == Term::Kind::Variable) values[args[3].name()] = to;
    }
    if (values.empty()) break;
    for (auto& element : rule->body) {
      if (auto* lit = std::get_if<Literal>(&element)) {
        for (auto& a : lit->atom.args) a = substitute(a, values);
        lit->comparison.left = substitute(lit->comparison.left, values);
        lit->comparison.right = substitute(lit->comparison.right, values);
      }
    }
    return query;
  }
  throw ScenarioError("round-trip program has no ahead_agents rule with a reference agent");
}

std::string route_text(const std::vector<GroundAtom>& atoms) {
  std::vector<CorridorKey> edges;
  for (const auto& a : atoms) {
    if (a.predicate == "new_plan" && a.args.size() == 3 && a.args[1].is_integer() && a.args[2].is_integer()) {
      edges.emplace_back(a.args[1].as_integer(), a.args[2].as_integer());
    }
  }
  if (edges.empty()) return {};
  auto start = edges.front().first;
  for (const auto& [u, v] : edges) {
    if (std::none_of(edges.begin(), edges.end(), [&](const CorridorKey& e) { return e.second == u; })) {
      start = u;
      break;
    }
  }
  std::string out = vp(start);
  std::vector<char> used(edges.size(), 0);
  for (auto at = start;;) {
    std::size_t i = 0;
    while (i < edges.size() && (used[i] || edges[i].first != at)) ++i;
    if (i == edges.size()) break;
    used[i] = 1;
    at = edges[i].second;
    out += " -> " + vp(at);
  }
  return out;
}

std::vector<std::int64_t> to_vec(const std::set<std::int64_t>& s) { return {s.begin(), s.end()}; }

std::string list_or_none(const std::vector<std::int64_t>& v) { return v.empty() ? "none" : join_ints(v); }

}  // namespace

const char* actor_name(Actor a) {
  switch (a) {
    case Actor::Manager: return "manager";
    case Actor::Uatm: return "uatm";
    case Actor::UatmNetwork: return "uatm-network";
  }
  return "?";
}

std::vector<std::int64_t> relayed_agents(const Outcome& o) {
  if (const auto* d = std::get_if<DetourOutcome>(&o)) return to_vec(d->uncovered);
  return to_vec(std::get<RoundTripOutcome>(o).covered_by_other);
}

Session::Session(Scenario base) : base_(std::move(base)), network_(build_network_view(base_.environment)) {
  QueryRun run = run_query(base_);
  latest_.scenario = base_.name;
  latest_.status = run.result.status;
  if (!run.result.models.empty()) {
    const auto& m = run.result.models.front();
    agents_ = agent_snapshots(model_atoms(run.program, m));
    latest_.projected = m.projected;
    latest_.validation = validate_answer_set(run.program, m);
  }
}

std::string Session::owner_of(std::int64_t vertiport) const {
  for (const auto& [uatm, vps] : network_.ownership) {
    if (vps.count(vertiport)) return "UATM" + std::to_string(uatm);
  }
  return "UATM";
}

std::vector<DialogueTurn> Session::refuse(DialogueTurn request, const std::string& reason) {
  DialogueTurn response{Actor::Uatm, "error: " + reason, request.query, std::nullopt, true};
  history_.push_back(request);
  history_.push_back(response);
  return {std::move(request), std::move(response)};
}

std::vector<DialogueTurn> Session::respond(DialogueTurn request, const Scenario& s, const std::string& responder,
                                           const std::string& action) {
  QueryRun run = run_query(s);
  DialogueTurn response{Actor::Uatm, "", s.name, std::nullopt, false};
  latest_ = LatestModel{s.name, run.result.status, {}, std::nullopt};
  if (run.result.models.empty()) {
    response.utterance = responder + ": no consistent plan exists (UNSATISFIABLE)";
  } else {
    const auto& m = run.result.models.front();
    auto atoms = model_atoms(run.program, m);
    Outcome outcome = extract_outcome(s.kind, atoms);
    latest_.projected = m.projected;
    latest_.validation = validate_answer_set(run.program, m);

    std::vector<std::int64_t> served;
    std::string detail;
    if (const auto* d = std::get_if<DetourOutcome>(&outcome)) {
      std::set<std::int64_t> rerouted;
      for (const auto& [agent, step] : d->route_changes) rerouted.insert(agent);
      served = to_vec(rerouted);
      detail = "covered: " + list_or_none(to_vec(d->covered));
    } else {
      const auto& r = std::get<RoundTripOutcome>(outcome);
      std::set<std::int64_t> looped;
      for (const auto& [agent, target, step] : r.round_routes) looped.insert(agent);
      served = to_vec(looped);
      detail = "covered by UATM2: " + list_or_none(to_vec(r.covered_by_uatm2));
    }
    std::ostringstream text;
    text << responder << ": ";
    if (served.empty()) {
      text << "no agents need a " << action;
    } else {
      text << action << " " << route_text(atoms) << " sent to agents " << join_ints(served) << "; " << detail
           << "; relayed via UATM Network: " << list_or_none(relayed_agents(outcome));
    }
    response.utterance = text.str();
    response.outcome = std::move(outcome);
  }
  history_.push_back(request);
  history_.push_back(response);
  return {std::move(request), std::move(response)};
}

std::vector<DialogueTurn> Session::report_congestion(std::int64_t from, std::int64_t to) {
  DialogueTurn request{Actor::Manager,
                       vp(to) + " manager: corridor " + corridor_text(from, to) +
                           " is congested, reroute the agents heading to " + vp(to),
                       std::string("query04"), std::nullopt, false};
  if (!network_.find_corridor(from, to)) {
    return refuse(std::move(request), "corridor " + corridor_text(from, to) + " is not in the network");
  }
  if (CorridorKey{from, to} != kDetourCorridor) {
    return refuse(std::move(request), "no detour route is defined for corridor " + corridor_text(from, to));
  }
  Scenario s = base_;
  s.name = "query04";
  s.query_file = "query04.lp";
  s.kind = OutcomeKind::Detour;
  s.query = parse_program(embedded_program("query04"));
  return respond(std::move(request), s, owner_of(to), "detour");
}

std::vector<DialogueTurn> Session::clear_corridor(std::int64_t from, std::int64_t to, std::int64_t behind) {
  DialogueTurn request{Actor::Manager,
                       vp(to) + " manager: agent " + std::to_string(behind) + " is inside corridor " +
                           corridor_text(from, to) + ", clear the agents ahead of it",
                       std::string("query05"), std::nullopt, false};
  if (!network_.find_corridor(from, to)) {
    return refuse(std::move(request), "corridor " + corridor_text(from, to) + " is not in the network");
  }
  Scenario s = base_;
  s.name = "query05";
  s.query_file = "query05.lp";
  s.kind = OutcomeKind::RoundTrip;
  s.query = retarget_ahead(parse_program(embedded_program("query05")), from, to, behind);
  return respond(std::move(request), s, owner_of(from), "round trip");
}

Session open_session(const std::string& scenario_name, const std::vector<Pin>& pins) {
  Scenario s = builtin_scenario(scenario_name);
  if (!pins.empty()) s = pin_locations(s, pins);
  return Session(std::move(s));
}

std::string repl_help() {
  return "commands:\n"
         "  network                          show vertiports, corridors and coverage\n"
         "  agents                           show placed agents of the session\n"
         "  report congestion U V            request a detour around corridor U -> V\n"
         "  clear corridor U V behind A      clear the agents ahead of agent A\n"
         "  history                          show the conversation so far\n"
         "  help                             show this text\n"
         "  quit                             leave\n";
}

std::string render_turn(const DialogueTurn& t) {
  return "[" + std::string(actor_name(t.actor)) + "] " + t.utterance + "\n";
}

DispatchResult repl_dispatch(const std::string& command, Session& session) {
  std::istringstream in(command);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);

  DispatchResult result;
  auto number = [&](std::size_t i) -> std::optional<std::int64_t> {
    if (i >= words.size()) return std::nullopt;
    try {
      std::size_t used = 0;
      auto v = std::stoll(words[i], &used);
      if (used == words[i].size()) return v;
    } catch (const std::exception&) {
    }
    return std::nullopt;
  };
  auto emit = [&](std::vector<DialogueTurn> turns) {
    for (const auto& t : turns) result.text += render_turn(t);
    result.turns = std::move(turns);
  };

  if (words.empty()) return result;
  const std::string& verb = words[0];
  if (verb == "quit" || verb == "exit") {
    result.quit = true;
  } else if (verb == "help" && words.size() == 1) {
    result.text = repl_help();
  } else if (verb == "network" && words.size() == 1) {
    result.text = render_network(session.network());
  } else if (verb == "agents" && words.size() == 1) {
    result.text = render_agents(session.agents());
  } else if (verb == "history" && words.size() == 1) {
    for (const auto& t : session.history()) result.text += render_turn(t);
  } else if (verb == "report" && words.size() == 4 && words[1] == "congestion" && number(2) && number(3)) {
    session.record_command(command);
    emit(session.report_congestion(*number(2), *number(3)));
  } else if (verb == "clear" && words.size() == 6 && words[1] == "corridor" && words[4] == "behind" && number(2) &&
             number(3) && number(5)) {
    session.record_command(command);
    emit(session.clear_corridor(*number(2), *number(3), *number(5)));
  } else {
    result.text = "unknown command '" + command + "'\n" + repl_help();
  }
  return result;
}

}  // namespace uamasp
