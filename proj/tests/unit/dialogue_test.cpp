#include <doctest/doctest.h>

#include "helpers.hpp"
#include "uamasp/dialogue.hpp"

using namespace uamasp;

TEST_SUITE("dialogue") {

TEST_CASE("detour request on the reference placement") {
  Session s = open_session("query04", testing::pins(testing::kPinsQuery04));
  auto turns = s.report_congestion(2, 3);
  REQUIRE(turns.size() == 2);
  CHECK(turns[0].actor == Actor::Manager);
  CHECK(turns[0].utterance == "vp3 manager: corridor vp2 -> vp3 is congested, reroute the agents heading to vp3");
  CHECK(turns[1].actor == Actor::Uatm);
  CHECK_FALSE(turns[1].error);
  CHECK(turns[1].utterance ==
        "UATM1: detour vp1 -> vp2 -> vp7 -> vp3 sent to agents 1, 2, 3, 4, 5, 6; covered: 1, 2, 3, 5; "
        "relayed via UATM Network: 4, 6");
  REQUIRE(turns[1].outcome);
  CHECK(relayed_agents(*turns[1].outcome) == std::vector<std::int64_t>{4, 6});
  CHECK(s.latest().scenario == "query04");
  CHECK(s.latest().status == SolveStatus::Satisfiable);
  REQUIRE(s.latest().validation);
  CHECK(s.latest().validation->passed());
}

TEST_CASE("round trip behind agent 7") {
  Session s = open_session("query05", {});
  auto turns = s.clear_corridor(2, 3, 7);
  REQUIRE(turns.size() == 2);
  CHECK(turns[0].utterance == "vp3 manager: agent 7 is inside corridor vp2 -> vp3, clear the agents ahead of it");
  CHECK(turns[1].utterance ==
        "UATM2: round trip vp3 -> vp7 -> vp3 sent to agents 8, 9, 10, 11, 12; covered by UATM2: 8; "
        "relayed via UATM Network: 9, 10, 11, 12");
  REQUIRE(turns[1].outcome);
  const auto& r = std::get<RoundTripOutcome>(*turns[1].outcome);
  CHECK(r.ahead == std::set<std::int64_t>{8, 9, 10, 11, 12});
}

TEST_CASE("a later reference agent leaves fewer agents ahead") {
  Session s = open_session("query05", {});
  auto turns = s.clear_corridor(2, 3, 10);
  REQUIRE(turns[1].outcome);
  const auto& r = std::get<RoundTripOutcome>(*turns[1].outcome);
  CHECK(r.ahead == std::set<std::int64_t>{11, 12});
  std::set<std::int64_t> looped;
  for (const auto& [agent, target, step] : r.round_routes) looped.insert(agent);
  CHECK(looped == r.ahead);
}

TEST_CASE("requests outside the network are refused") {
  Session s = open_session("query04", testing::pins(testing::kPinsQuery04));
  auto bad = s.report_congestion(9, 9);
  REQUIRE(bad.size() == 2);
  CHECK(bad[1].error);
  CHECK(bad[1].utterance == "error: corridor vp9 -> vp9 is not in the network");
  CHECK_FALSE(bad[1].outcome);
  auto other = s.report_congestion(1, 2);
  CHECK(other[1].utterance == "error: no detour route is defined for corridor vp1 -> vp2");
  auto clear = s.clear_corridor(3, 1, 7);
  CHECK(clear[1].error);
  CHECK(s.history().size() == 6);
}

TEST_CASE("every action adds a request and a response") {
  Session s = open_session("query04", testing::pins(testing::kPinsQuery04));
  for (const char* line : {"report congestion 2 3", "report congestion 4 4", "network", "agents", "help", "history",
                           "clear corridor 2 3 behind 7", "bogus"}) {
    auto before = s.history().size();
    auto r = repl_dispatch(line, s);
    CHECK(s.history().size() - before == r.turns.size());
    CHECK((r.turns.empty() || r.turns.size() == 2));
  }
  CHECK(s.commands().size() == 3);
  for (std::size_t i = 0; i < s.history().size(); i += 2) {
    CHECK(s.history()[i].actor == Actor::Manager);
    CHECK(s.history()[i + 1].actor == Actor::Uatm);
  }
}

TEST_CASE("repl commands") {
  Session s = open_session("query04", testing::pins(testing::kPinsQuery04));
  CHECK(repl_dispatch("help", s).text == repl_help());
  CHECK(repl_dispatch("quit", s).quit);
  CHECK(repl_dispatch("exit", s).quit);
  CHECK(repl_dispatch("", s).text.empty());
  auto unknown = repl_dispatch("report congestion two 3", s);
  CHECK(unknown.text.rfind("unknown command 'report congestion two 3'", 0) == 0);
  CHECK(unknown.turns.empty());
  CHECK(repl_dispatch("network", s).text.find("vp2 -> vp7") != std::string::npos);
  auto agents = repl_dispatch("agents", s).text;
  CHECK(agents.find("agent 1") != std::string::npos);
  auto r = repl_dispatch("report congestion 2 3", s);
  CHECK(r.text == render_turn(r.turns[0]) + render_turn(r.turns[1]));
  CHECK(r.text.rfind("[manager] vp3 manager:", 0) == 0);
  CHECK(repl_dispatch("history", s).text == r.text);
}

TEST_CASE("replaying the command log reproduces the history") {
  Session a = open_session("query04", testing::pins(testing::kPinsQuery04));
  for (const char* line : {"report congestion 2 3", "clear corridor 2 3 behind 7", "report congestion 7 3"}) {
    repl_dispatch(line, a);
  }
  Session b = open_session("query04", testing::pins(testing::kPinsQuery04));
  for (const auto& line : a.commands()) repl_dispatch(line, b);
  REQUIRE(a.history().size() == b.history().size());
  for (std::size_t i = 0; i < a.history().size(); ++i) {
    CHECK(render_turn(a.history()[i]) == render_turn(b.history()[i]));
    CHECK(a.history()[i].outcome == b.history()[i].outcome);
  }
}

TEST_CASE("unknown scenarios and bad pins") {
  CHECK_THROWS_AS(open_session("query99", {}), ScenarioError);
  CHECK_THROWS_AS(open_session("query04", testing::pins({"1=1-2:1"})), ScenarioError);
}

}
