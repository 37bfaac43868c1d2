#include <doctest/doctest.h>

#include <filesystem>
#include <sstream>

#include "helpers.hpp"
#include "uamasp/commands.hpp"
#include "uamasp/format.hpp"

using namespace uamasp;
namespace fs = std::filesystem;

namespace {

std::string scenario_path(const std::string& stem) { return std::string(UAMASP_SCENARIO_DIR) + "/" + stem + ".lp"; }

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name, const std::string& text)
      : path(fs::temp_directory_path() / ("uamasp_cli_" + name)) {
    std::ofstream(path, std::ios::binary) << text;
  }
  ~TempFile() { fs::remove(path); }
};

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run solve(SolveCommand c) {
  std::ostringstream out, err;
  int code = cmd_solve(c, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::set<std::string> words(const std::string& line) {
  std::set<std::string> out;
  std::istringstream in(line);
  for (std::string w; in >> w;) out.insert(w);
  return out;
}

// Timing lines vary between runs; atom order on an answer line is not fixed.
void check_golden(const std::string& actual, const std::string& golden_name) {
  auto expected = lines(testing::read_text(std::string(UAMASP_GOLDEN_DIR) + "/" + golden_name));
  auto got = lines(actual);
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CAPTURE(i);
    const auto& e = expected[i];
    if (e.rfind("Reading from ", 0) == 0) {
      CHECK(got[i].rfind("Reading from ", 0) == 0);
      CHECK(got[i].ends_with("env_info.lp ..."));
    } else if (e.rfind("Time", 0) == 0 || e.rfind("CPU Time", 0) == 0) {
      CHECK(got[i].rfind(e.substr(0, 13), 0) == 0);
    } else if (i > 0 && expected[i - 1].rfind("Answer: ", 0) == 0) {
      CHECK(words(got[i]) == words(e));
    } else {
      CHECK(got[i] == e);
    }
  }
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("trivial program") {
  TempFile f("p.lp", "p.\n#show p/0.\n");
  auto r = solve({{f.path.string()}, 1, {}, false});
  CHECK(r.code == kExitSatisfiable);
  auto l = lines(r.out);
  REQUIRE(l.size() >= 9);
  CHECK(l[0] == banner());
  CHECK(l[1] == "Reading from " + f.path.string() + " ...");
  CHECK(l[2] == "Solving...");
  CHECK(l[3] == "Answer: 1");
  CHECK(l[4] == "p");
  CHECK(l[5] == "SATISFIABLE");
  CHECK(l[6].empty());
  CHECK(l[7] == "Models       : 1");
  CHECK(r.err.empty());
}

TEST_CASE("unsatisfiable program") {
  TempFile f("unsat.lp", ":- not a.\n");
  auto r = solve({{f.path.string()}, 0, {}, false});
  CHECK(r.code == kExitUnsatisfiable);
  CHECK(r.out.find("Answer:") == std::string::npos);
  CHECK(r.out.find("\nUNSATISFIABLE\n") != std::string::npos);
  CHECK(r.out.find("Models       : 0\n") != std::string::npos);
}

TEST_CASE("errors") {
  auto missing = solve({{"/nonexistent/none.lp"}, 1, {}, false});
  CHECK(missing.code == kExitError);
  CHECK(missing.err.find("none.lp") != std::string::npos);
  CHECK(missing.out.empty());

  TempFile bad("bad.lp", "p(1).\nq(X :- p(X).\n");
  auto parse = solve({{bad.path.string()}, 1, {}, false});
  CHECK(parse.code == kExitError);
  CHECK(parse.err.find(bad.path.string() + ":2:") != std::string::npos);

  TempFile unsafe("unsafe.lp", "p(X) :- not q(X).\n");
  CHECK(solve({{unsafe.path.string()}, 1, {}, false}).code == kExitError);

  auto pin = solve({{scenario_path("env_info"), scenario_path("agent_info1"), scenario_path("query01")},
                    1,
                    {"1=1-2:1"},
                    false});
  CHECK(pin.code == kExitError);
  CHECK_FALSE(pin.err.empty());
  CHECK(solve({{scenario_path("query01")}, 1, {"7=1-2"}, false}).code == kExitError);
}

TEST_CASE("dump ground program") {
  TempFile f("dump.lp", "q(1..2).\n0{p(X)}1 :- q(X).\n");
  auto r = solve({{f.path.string()}, 1, {}, true});
  CHECK(r.code == kExitHelp);
  CHECK(r.out.find("Answer:") == std::string::npos);
  CHECK(r.out.find("q(1).") != std::string::npos);
  CHECK(r.out.find("0{p(2)}1.") != std::string::npos);
}

TEST_CASE("bounded and exhaustive stats") {
  TempFile f("choice.lp", "0{a;b}2.\n");
  auto bounded = solve({{f.path.string()}, 1, {}, false});
  CHECK(bounded.out.find("Models       : 1+\n") != std::string::npos);
  auto all = solve({{f.path.string()}, 0, {}, false});
  CHECK(all.out.find("Models       : 4\n") != std::string::npos);
  CHECK(all.out.find("Answer: 4\n") != std::string::npos);
  CHECK(all.out.find("Calls        : 1\n") != std::string::npos);
}

TEST_CASE("reference runs match goldens") {
  struct Case {
    const char* agents;
    const char* query;
    const std::vector<std::string>* pins;
    const char* golden;
  };
  std::vector<Case> cases = {{"agent_info1", "query01", &testing::kPinsQuery01, "query01_pinned.txt"},
                             {"agent_info1", "query02", &testing::kPinsQuery02, "query02_pinned.txt"},
                             {"agent_info1", "query03", &testing::kPinsQuery03, "query03_pinned.txt"},
                             {"agent_info1", "query04", &testing::kPinsQuery04, "query04_pinned.txt"},
                             {"agent_info2", "query05", nullptr, "query05.txt"}};
  for (const auto& c : cases) {
    CAPTURE(c.golden);
    SolveCommand cmd{{scenario_path("env_info"), scenario_path(c.agents), scenario_path(c.query)}, 0, {}, false};
    if (c.pins) cmd.pins = *c.pins;
    auto r = solve(cmd);
    CHECK(r.code == kExitSatisfiable);
    check_golden(r.out, c.golden);
  }
}

TEST_CASE("scenario listing") {
  std::ostringstream out;
  CHECK(cmd_scenario_list(out) == kExitHelp);
  auto l = lines(out.str());
  REQUIRE(l.size() == 5);
  CHECK(l[0] == "query01: env_info.lp agent_info1.lp query01.lp");
  CHECK(l[4] == "query05: env_info.lp agent_info2.lp query05.lp");
}

TEST_CASE("scenario run text report") {
  std::ostringstream out, err;
  ScenarioCommand c{"query01", testing::kPinsQuery01, 1, true, false};
  CHECK(cmd_scenario_run(c, out, err) == kExitSatisfiable);
  auto text = out.str();
  CHECK(text.rfind("scenario: query01\n", 0) == 0);
  CHECK(text.find("files: env_info.lp agent_info1.lp query01.lp\n") != std::string::npos);
  CHECK(text.find("status: SATISFIABLE\n") != std::string::npos);
  CHECK(text.find("models: 1 (exhaustive)\n") != std::string::npos);
  CHECK(text.find("model 1:\n") != std::string::npos);
  CHECK(text.find("1, 2, 5, 6") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cmd_scenario_run({"query09", {}, 1, false, false}, out2, err2) == kExitError);
  CHECK(err2.str().find("query09") != std::string::npos);
}

TEST_CASE("scenario run json report") {
  auto report = scenario_report({"query05", {}, 0, true, true});
  CHECK(report["schema_version"] == 1);
  CHECK(report["scenario"] == "query05");
  CHECK(report["status"] == "SATISFIABLE");
  CHECK(report["exhausted"] == true);
  REQUIRE(report["models"].size() == 1);
  const auto& m = report["models"][0];
  CHECK(m["id"] == 1);
  CHECK(m["validation"]["passed"] == true);
  CHECK(m["outcome"]["kind"] == "round_trip");
  CHECK(m["outcome"]["covered_by_other"] == nlohmann::json::array({9, 10, 11, 12}));
  bool has = false;
  for (const auto& a : m["atoms"]) has = has || a == "round_route(8,3,3)";
  CHECK(has);

  std::ostringstream out, err;
  CHECK(cmd_scenario_run({"query04", testing::kPinsQuery04, 1, false, true}, out, err) == kExitSatisfiable);
  auto parsed = nlohmann::json::parse(out.str());
  CHECK(parsed["pins"].size() == 6);
  CHECK(parsed["models"][0]["outcome"]["kind"] == "detour");
}

}
