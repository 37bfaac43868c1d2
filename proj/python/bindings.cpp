#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uamasp/commands.hpp"
#include "uamasp/dialogue.hpp"
#include "uamasp/error.hpp"
#include "uamasp/format.hpp"
#include "uamasp/grounder.hpp"
#include "uamasp/json_io.hpp"
#include "uamasp/parser.hpp"
#include "uamasp/printer.hpp"
#include "uamasp/scenario.hpp"
#include "uamasp/solver.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

std::vector<uamasp::Pin> parse_pins(const std::vector<std::string>& text) {
  std::vector<uamasp::Pin> pins;
  for (const auto& t : text) pins.push_back(uamasp::parse_pin(t));
  return pins;
}

std::string solve_json(const std::string& source, std::size_t max_models, const std::vector<std::string>& pins) {
  uamasp::Program program = uamasp::parse_program(source);
  if (!pins.empty()) program = uamasp::pin_program(uamasp::Program{}, program, parse_pins(pins));
  uamasp::GroundProgram g = uamasp::ground(program);
  uamasp::SolveOptions o;
  o.max_models = max_models;
  uamasp::SolveResult r;
  {
    py::gil_scoped_release release;
    r = uamasp::solve(g, o);
  }
  json models = json::array();
  for (const auto& m : r.models) models.push_back(uamasp::atoms_json(m.projected));
  return json{{"schema_version", uamasp::kSchemaVersion},
              {"status", uamasp::status_text(r.status)},
              {"exhausted", r.exhausted},
              {"models", models},
              {"stats",
               {{"models", r.stats.models},
                {"decisions", r.stats.decisions},
                {"conflicts", r.stats.conflicts},
                {"wall_seconds", r.stats.wall_seconds}}}}
      .dump();
}

std::string json_turns(const std::vector<uamasp::DialogueTurn>& turns) {
  const auto& last = turns.back();
  return json{{"schema_version", uamasp::kSchemaVersion},
              {"turns", uamasp::to_json(turns)},
              {"outcome", last.outcome ? uamasp::to_json(*last.outcome) : json(nullptr)},
              {"error", last.error ? json(last.utterance) : json(nullptr)}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_uamasp, m) {
  m.doc() = "Answer set solving for vertiport traffic scenarios";
  py::register_exception<uamasp::Error>(m, "Error", PyExc_ValueError);

  m.def("version", &uamasp::version);
  m.def("solve_json", &solve_json, py::arg("source"), py::arg("max_models") = 1,
        py::arg("pins") = std::vector<std::string>{});
  m.def("ground_text", [](const std::string& source) {
    return uamasp::dump_ground_program(uamasp::ground(uamasp::parse_program(source)));
  });
  m.def("format_program", [](const std::string& source) { return uamasp::print_program(uamasp::parse_program(source)); });
  m.def("scenario_names", &uamasp::builtin_scenario_names);
  m.def("embedded_program", [](const std::string& stem) { return uamasp::embedded_program(stem); });
  m.def(
      "scenario_json",
      [](const std::string& name, const std::vector<std::string>& pins, std::size_t max_models, bool validate) {
        return uamasp::scenario_report({name, pins, max_models, validate, true}).dump();
      },
      py::arg("name"), py::arg("pins") = std::vector<std::string>{}, py::arg("max_models") = 1,
      py::arg("validate") = false);
  m.def("network_json", [] {
    return json{{"schema_version", uamasp::kSchemaVersion},
                {"network", uamasp::to_json(uamasp::build_network_view(uamasp::builtin_scenario("query01").environment))}}
        .dump();
  });

  py::class_<uamasp::Session>(m, "Session")
      .def(py::init([](const std::string& name, const std::vector<std::string>& pins) {
             return uamasp::open_session(name, parse_pins(pins));
           }),
           py::arg("scenario"), py::arg("pins") = std::vector<std::string>{})
      .def("report_congestion_json",
           [](uamasp::Session& s, std::int64_t from, std::int64_t to) { return json_turns(s.report_congestion(from, to)); })
      .def("clear_corridor_json",
           [](uamasp::Session& s, std::int64_t from, std::int64_t to, std::int64_t behind) {
             return json_turns(s.clear_corridor(from, to, behind));
           })
      .def("history_json", [](const uamasp::Session& s) { return uamasp::to_json(s.history()).dump(); })
      .def("agents_json", [](const uamasp::Session& s) { return uamasp::to_json(s.agents()).dump(); })
      .def("repl", [](uamasp::Session& s, const std::string& line) { return uamasp::repl_dispatch(line, s).text; })
      .def_property_readonly("scenario", [](const uamasp::Session& s) { return s.scenario().name; });
}
