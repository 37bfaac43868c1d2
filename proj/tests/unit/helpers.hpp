#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "uamasp/grounder.hpp"
#include "uamasp/parser.hpp"
#include "uamasp/scenario.hpp"
#include "uamasp/solver.hpp"

namespace testing {

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string scenario_file(const std::string& stem) {
  return read_text(std::string(UAMASP_SCENARIO_DIR) + "/" + stem + ".lp");
}

inline std::vector<uamasp::Pin> pins(const std::vector<std::string>& text) {
  std::vector<uamasp::Pin> out;
  for (const auto& t : text) out.push_back(uamasp::parse_pin(t));
  return out;
}

// Agent placements of the four reference runs, agent=U-V:WP.
inline const std::vector<std::string> kPinsQuery01 = {"1=1-2:1", "2=1-2:11", "3=1-2:19", "4=1-2:16", "5=1-2:4", "6=1-2:2"};
inline const std::vector<std::string> kPinsQuery02 = {"1=1-2:1", "2=1-2:10", "3=1-2:3", "4=1-2:19", "5=1-2:5", "6=1-2:18"};
inline const std::vector<std::string> kPinsQuery03 = {"1=1-2:1", "2=1-2:8", "3=1-2:16", "4=1-2:2", "5=1-2:19", "6=1-2:17"};
inline const std::vector<std::string> kPinsQuery04 = {"1=1-2:6", "2=1-2:9", "3=1-2:1", "4=1-2:18", "5=1-2:5", "6=1-2:19"};

inline uamasp::Scenario pinned(const std::string& name, const std::vector<std::string>& p) {
  return uamasp::pin_locations(uamasp::builtin_scenario(name), pins(p));
}

inline std::set<std::string> shown(const uamasp::AnswerSet& m) {
  std::set<std::string> out;
  for (const auto& a : m.projected) out.insert(a.to_string());
  return out;
}

inline std::set<std::string> with_predicate(const uamasp::AnswerSet& m, const std::string& predicate) {
  std::set<std::string> out;
  for (const auto& a : m.projected) {
    if (a.predicate == predicate) out.insert(a.to_string());
  }
  return out;
}

inline uamasp::SolveResult solve_text(const std::string& source, std::size_t max_models = 0) {
  uamasp::SolveOptions o;
  o.max_models = max_models;
  return uamasp::solve(uamasp::ground(uamasp::parse_program(source)), o);
}

inline std::set<std::set<std::string>> model_sets(const uamasp::SolveResult& r) {
  std::set<std::set<std::string>> out;
  for (const auto& m : r.models) out.insert(shown(m));
  return out;
}

}  // namespace testing

namespace testing {

// Three agents on shortened corridors: zones on corridor (1,2) are
// only-uatm1 {1,2}, both {3,4}, only-uatm2 {5,6}.
inline const char* kSmallEnvironment = R"(
uatm(1..3). agent(1..3). vp(1..7).
edge(1, 2). edge(2, 3). edge(2, 7). edge(7, 3).
cover(1, 1). cover(1, 3). cover(2, 2). cover(3, 7).
edge_range(1, 2, 1..6).
edge_range(2, 3, 1..4).
edge_range(2, 7, 1..5).
covered_wp(1, 2, 1, P) :- edge_range(1, 2, P), P < 5.
covered_wp(1, 2, 2, P) :- edge_range(1, 2, P), 3 <= P.
covered_wp(2, 3, 1, P) :- edge_range(2, 3, P), 3 <= P.
covered_wp(2, 3, 2, P) :- edge_range(2, 3, P), P < 3.
covered_wp(2, 7, 2, P) :- edge_range(2, 7, P), P < 3.
covered_wp(2, 7, 3, P) :- edge_range(2, 7, P), 5 <= P.
step(1..3).
)";

inline std::string replace_all(std::string text, const std::string& from, const std::string& to) {
  for (std::size_t at = text.find(from); at != std::string::npos; at = text.find(from, at + to.size())) {
    text.replace(at, from.size(), to);
  }
  return text;
}

// agent_info1 restricted to agents 1..3.
inline std::string three_agents() { return replace_all(scenario_file("agent_info1"), "A <= 6", "A <= 3"); }

}  // namespace testing
