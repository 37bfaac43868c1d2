#include <csignal>
#include <iostream>
#include <string>
#include <vector>

#include <CLI/CLI.hpp>

#include "uamasp/commands.hpp"
#include "uamasp/dialogue.hpp"
#include "uamasp/error.hpp"
#include "uamasp/format.hpp"
#include "uamasp/scenario.hpp"
#include "uamasp/service.hpp"

namespace {

uamasp::ApiServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int run_repl(const std::string& scenario, const std::vector<std::string>& pin_text) {
  std::vector<uamasp::Pin> pins;
  for (const auto& p : pin_text) pins.push_back(uamasp::parse_pin(p));
  uamasp::Session session = uamasp::open_session(scenario, pins);
  std::cout << uamasp::banner() << "\nsession: " << scenario << "\n" << uamasp::repl_help();
  for (std::string line;;) {
    std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    auto r = uamasp::repl_dispatch(line, session);
    std::cout << r.text;
    if (r.quit) break;
  }
  return uamasp::kExitHelp;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Answer set solver and UATM corridor dialogue"};
  app.set_version_flag("--version", uamasp::banner());
  app.require_subcommand(1);

  uamasp::SolveCommand solve;
  auto* solve_cmd = app.add_subcommand("solve", "Ground and solve program files");
  solve_cmd->add_option("files", solve.files, "Program files, concatenated in order")->required();
  solve_cmd->add_option("-n,--models", solve.max_models, "Models to compute (0 = all)")->default_val(1);
  solve_cmd->add_option("--pin", solve.pins, "Fix an agent's location, AGENT=U-V:WP");
  solve_cmd->add_flag("--dump-ground", solve.dump_ground, "Print the ground program instead of solving");

  uamasp::ScenarioCommand scenario;
  auto* scenario_cmd = app.add_subcommand("scenario", "Built-in corridor scenarios");
  scenario_cmd->require_subcommand(1);
  auto* list_cmd = scenario_cmd->add_subcommand("list", "List built-in scenarios");
  auto* run_cmd = scenario_cmd->add_subcommand("run", "Run a built-in scenario");
  run_cmd->add_option("name", scenario.name, "Scenario name (query01..query05)")->required();
  run_cmd->add_option("--pin", scenario.pins, "Fix an agent's location, AGENT=U-V:WP");
  run_cmd->add_option("-n,--models", scenario.max_models, "Models to compute (0 = all)")->default_val(1);
  run_cmd->add_flag("--validate", scenario.validate, "Check every model independently");
  run_cmd->add_flag("--json", scenario.json, "Machine-readable report");

  std::string repl_scenario = "query04";
  std::vector<std::string> repl_pins;
  auto* repl_cmd = app.add_subcommand("repl", "Manager/UATM dialogue");
  repl_cmd->add_option("--scenario", repl_scenario, "Scenario holding the session's agents")->default_val("query04");
  repl_cmd->add_option("--pin", repl_pins, "Fix an agent's location, AGENT=U-V:WP");

  std::string host = "127.0.0.1";
  int port = uamasp::default_port();
  auto* serve_cmd = app.add_subcommand("serve", "JSON API for the operator console");
  serve_cmd->add_option("--host", host, "Address to bind")->default_val("127.0.0.1");
  serve_cmd->add_option("--port", port, "Port (default from UAMASP_PORT or 8080)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? uamasp::kExitHelp : uamasp::kExitError;
  }

  try {
    if (*solve_cmd) return uamasp::cmd_solve(solve, std::cout, std::cerr);
    if (*list_cmd) return uamasp::cmd_scenario_list(std::cout);
    if (*run_cmd) return uamasp::cmd_scenario_run(scenario, std::cout, std::cerr);
    if (*repl_cmd) return run_repl(repl_scenario, repl_pins);
    if (*serve_cmd) {
      uamasp::ApiServer server;
      int bound = server.bind(host, port);
      if (bound < 0) {
        std::cerr << "error: cannot bind " << host << ":" << port << "\n";
        return uamasp::kExitError;
      }
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cerr << "listening on http://" << host << ":" << bound << "\n";
      server.run();
      g_server = nullptr;
      return uamasp::kExitHelp;
    }
  } catch (const uamasp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return uamasp::kExitError;
  }
  return uamasp::kExitError;
}
