#include <doctest/doctest.h>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "uamasp/outcome.hpp"

using namespace uamasp;

namespace {

std::size_t count_if_statement(const Program& p, bool (*pred)(const Statement&)) {
  return std::count_if(p.statements.begin(), p.statements.end(), pred);
}

bool is_choice(const Statement& s) { return std::holds_alternative<ChoiceRule>(s.node); }
bool is_constraint(const Statement& s) { return std::holds_alternative<Constraint>(s.node); }
bool is_fact(const Statement& s) { return std::holds_alternative<Fact>(s.node); }

DetourOutcome detour_of(const Scenario& s) {
  auto run = run_query(s);
  REQUIRE(run.result.models.size() == 1);
  return std::get<DetourOutcome>(extract_outcome(s, run.program, run.result.models[0]));
}

std::set<AgentStep> at_step2(std::initializer_list<std::int64_t> agents) {
  std::set<AgentStep> out;
  for (auto a : agents) out.emplace(a, 2);
  return out;
}

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("built-in scenarios pair the program files") {
  Scenario q1 = builtin_scenario("query01");
  CHECK(q1.environment == parse_program(testing::scenario_file("env_info")));
  CHECK(q1.agents == parse_program(testing::scenario_file("agent_info1")));
  CHECK(q1.query == parse_program(testing::scenario_file("query01")));
  CHECK(q1.kind == OutcomeKind::Detour);

  Scenario q5 = builtin_scenario("query05");
  CHECK(q5.agents_file == "agent_info2.lp");
  CHECK(q5.agents == parse_program(testing::scenario_file("agent_info2")));
  CHECK(q5.query == parse_program(testing::scenario_file("query05")));
  CHECK(q5.kind == OutcomeKind::RoundTrip);

  CHECK_THROWS_AS(builtin_scenario("query99"), ScenarioError);
}

TEST_CASE("embedded programs equal the files on disk") {
  REQUIRE(embedded_programs().size() == 8);
  for (const auto& [stem, text] : embedded_programs()) {
    CAPTURE(stem);
    CHECK(text == testing::scenario_file(stem));
  }
  CHECK_THROWS_AS(embedded_program("nope"), ScenarioError);
}

TEST_CASE("pin text") {
  CHECK(parse_pin("1=1-2:6") == Pin{1, 1, 2, 6});
  CHECK(parse_pin(" 12 = 2 - 3 : 10 ") == Pin{12, 2, 3, 10});
  CHECK(format_pin(Pin{4, 1, 2, 18}) == "4=1-2:18");
  for (const char* bad : {"", "1=1-2", "a=1-2:3", "1:1-2=3", "1=1-2:3x", "-1=1-2:3", "1=1-2:99999999999999999999"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_pin(bad), ScenarioError);
  }
}

TEST_CASE("pinning replaces the placement choice by facts") {
  Scenario base = builtin_scenario("query01");
  Scenario s = testing::pinned("query01", testing::kPinsQuery01);
  CHECK(count_if_statement(s.agents, is_choice) == 0);
  CHECK(count_if_statement(base.agents, is_constraint) - count_if_statement(s.agents, is_constraint) == 1);
  CHECK(count_if_statement(s.agents, is_fact) == 6);
  CHECK(s.agents.statements.size() == base.agents.statements.size() - 2 + 6);
  CHECK(s.environment == base.environment);
  CHECK(s.query == base.query);
  CHECK(s.pins.size() == 6);

  auto o = detour_of(s);
  CHECK(o.covered == std::set<std::int64_t>{1, 2, 5, 6});
}

TEST_CASE("pinning errors") {
  auto attempt = [](std::vector<std::string> p) { return testing::pinned("query01", p); };
  auto with = [](std::size_t i, const std::string& replacement) {
    auto p = testing::kPinsQuery01;
    p[i] = replacement;
    return p;
  };
  CHECK_THROWS_AS(attempt(with(1, "2=1-2:1")), ScenarioError);   // shares agent 1's waypoint
  CHECK_THROWS_AS(attempt(with(1, "2=1-2:21")), ScenarioError);  // beyond the corridor
  CHECK_THROWS_AS(attempt(with(1, "2=2-3:4")), ScenarioError);   // wrong corridor
  CHECK_THROWS_AS(attempt(with(1, "1=1-2:12")), ScenarioError);  // agent 1 twice, agent 2 missing
  CHECK_THROWS_AS(attempt({"1=1-2:1", "2=1-2:2"}), ScenarioError);
  auto extra = testing::kPinsQuery01;
  extra.push_back("7=1-2:7");
  CHECK_THROWS_AS(attempt(extra), ScenarioError);
  CHECK_THROWS_AS(testing::pinned("query05", {"7=2-3:2"}), ScenarioError);
}

TEST_CASE("reference runs") {
  auto r2 = detour_of(testing::pinned("query02", testing::kPinsQuery02));
  CHECK(r2.detour_requests == at_step2({1, 2, 3, 5}));
  CHECK(r2.route_changes == at_step2({1, 2, 3, 5}));

  auto r3 = detour_of(testing::pinned("query03", testing::kPinsQuery03));
  CHECK(r3.uncovered == std::set<std::int64_t>{3, 5, 6});

  auto r4 = detour_of(testing::pinned("query04", testing::kPinsQuery04));
  CHECK(r4 == DetourOutcome{{1, 2, 3, 5}, {4, 6}, at_step2({1, 2, 3, 4, 5, 6}), at_step2({1, 2, 3, 4, 5, 6})});

  Scenario q5 = builtin_scenario("query05");
  auto run = run_query(q5);
  REQUIRE(run.result.models.size() == 1);
  auto r5 = std::get<RoundTripOutcome>(extract_outcome(q5, run.program, run.result.models[0]));
  CHECK(r5.covered_by_uatm2 == std::set<std::int64_t>{8});
  CHECK(r5.covered_by_other == std::set<std::int64_t>{9, 10, 11, 12});
}

TEST_CASE("outcome extraction ignores unknown atoms") {
  CHECK(extract_detour({}) == DetourOutcome{});
  CHECK(extract_round_trip({}) == RoundTripOutcome{});
  std::vector<GroundAtom> atoms = {{"covered_by_uatm1", {Value::integer(3)}},
                                   {"covered_by_uatm1", {Value::symbol("x")}},
                                   {"covered_by_uatm1", {Value::integer(1), Value::integer(2)}},
                                   {"other", {Value::integer(1)}}};
  CHECK(extract_detour(atoms).covered == std::set<std::int64_t>{3});
}

TEST_CASE("every detour model reroutes over vp7") {
  SolveOptions o;
  o.max_models = 40;
  Scenario s = builtin_scenario("query04");
  auto run = run_query(s, o);
  REQUIRE(run.result.models.size() == 40);
  const std::set<CorridorKey> detour{{1, 2}, {2, 7}, {7, 3}};
  for (const auto& m : run.result.models) {
    auto atoms = model_atoms(run.program, m);
    auto outcome = std::get<DetourOutcome>(extract_outcome(s, run.program, m));
    for (auto a : outcome.covered) CHECK_FALSE(outcome.uncovered.count(a));
    std::map<std::int64_t, std::set<CorridorKey>> step2;
    for (const auto& a : atoms) {
      if (a.predicate == "plan" && a.args[1] == Value::integer(2)) {
        step2[a.args[0].as_integer()].emplace(a.args[2].as_integer(), a.args[3].as_integer());
      }
    }
    for (std::int64_t agent = 1; agent <= 6; ++agent) {
      CHECK(outcome.detour_requests.count({agent, 2}));
      CHECK(step2[agent] == detour);
    }
  }
}

TEST_CASE("round trips go to exactly the agents ahead") {
  Scenario s = builtin_scenario("query05");
  SolveOptions o;
  o.max_models = 0;
  auto run = run_query(s, o);
  for (const auto& m : run.result.models) {
    auto r = std::get<RoundTripOutcome>(extract_outcome(s, run.program, m));
    std::set<RoundTrip> expected;
    for (auto a : r.ahead) expected.emplace(a, 3, 3);
    CHECK(r.round_requests == expected);
    CHECK(r.round_routes == expected);
    CHECK(r.ahead == std::set<std::int64_t>{8, 9, 10, 11, 12});
  }
}

TEST_CASE("agent snapshots") {
  Scenario s = testing::pinned("query04", testing::kPinsQuery04);
  auto run = run_query(s);
  auto agents = agent_snapshots(model_atoms(run.program, run.result.models[0]));
  REQUIRE(agents.size() == 6);
  CHECK(agents[0].agent == 1);
  CHECK(agents[0].waypoint == 6);
  CHECK(agents[0].corridor == CorridorKey{1, 2});
  CHECK(agents[0].plan == std::set<CorridorKey>{{1, 2}, {2, 3}});
  CHECK(agents[0].target == 3);

  Scenario q5 = builtin_scenario("query05");
  auto r5 = run_query(q5);
  auto trip = agent_snapshots(model_atoms(r5.program, r5.result.models[0]));
  REQUIRE(trip.size() == 6);
  CHECK(trip[0].agent == 7);
  CHECK(trip[0].step == 2);
  CHECK(trip[0].waypoint == 2);
}

}
