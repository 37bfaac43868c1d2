#include "uamasp/format.hpp"

#include <cstdio>
#include <sstream>

#ifndef UAMASP_VERSION
#define UAMASP_VERSION "0.0.0"
#endif

namespace uamasp {

namespace {

std::string fixed(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string stat_line(const std::string& key, const std::string& value) {
  std::string k = key;
  k.resize(13, ' ');
  return k + ": " + value + "\n";
}

template <class Set>
std::string pairs(const Set& s) {
  std::string out;
  for (const auto& [a, b] : s) {
    if (!out.empty()) out += ", ";
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return out.empty() ? "none" : out;
}

template <class Set>
std::string triples(const Set& s) {
  std::string out;
  for (const auto& [a, b, c] : s) {
    if (!out.empty()) out += ", ";
    out += "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  }
  return out.empty() ? "none" : out;
}

std::string ints(const std::set<std::int64_t>& s) { return s.empty() ? "none" : join_ints({s.begin(), s.end()}); }

}  // namespace

const char* version() { return UAMASP_VERSION; }

std::string banner() { return std::string("uamasp version ") + version(); }

std::string join_ints(const std::vector<std::int64_t>& values, const char* sep) {
  std::string out;
  for (auto v : values) {
    if (!out.empty()) out += sep;
    out += std::to_string(v);
  }
  return out;
}

std::string format_result(const SolveResult& r) {
  std::string out;
  for (std::size_t i = 0; i < r.models.size(); ++i) {
    out += "Answer: " + std::to_string(i + 1) + "\n";
    std::string line;
    for (const auto& a : r.models[i].projected) {
      if (!line.empty()) line += ' ';
      line += a.to_string();
    }
    out += line + "\n";
  }
  out += std::string(status_text(r.status)) + "\n\n";
  std::string models = std::to_string(r.models.size());
  if (!r.exhausted) models += "+";
  const auto& s = r.stats;
  out += stat_line("Models", models);
  out += stat_line("Calls", "1");
  out += stat_line("Time", fixed("%.3fs", s.wall_seconds) + " (Solving: " + fixed("%.2fs", s.wall_seconds) +
                               " 1st Model: " + fixed("%.2fs", s.first_model_seconds) +
                               " Unsat: " + fixed("%.2fs", s.unsat_seconds) + ")");
  out += stat_line("CPU Time", fixed("%.3fs", s.cpu_seconds));
  return out;
}

std::string render_network(const VertiportNetwork& net) {
  std::ostringstream out;
  out << "vertiports: " << join_ints(net.vertiports) << "\n";
  out << "uatms: " << join_ints(net.uatms) << "\n";
  for (const auto& [uatm, vps] : net.ownership) {
    out << "  UATM" << uatm << " covers vertiports " << ints(vps) << "\n";
  }
  out << "corridors:\n";
  for (const auto& c : net.corridors) {
    out << "  vp" << c.from << " -> vp" << c.to << ": " << c.waypoints << " waypoints\n";
    if (c.waypoints == 0) continue;
    // group consecutive waypoints with the same covering set
    std::int64_t start = 1;
    auto current = net.covering(c.from, c.to, 1);
    for (std::int64_t wp = 2; wp <= c.waypoints + 1; ++wp) {
      auto next = wp <= c.waypoints ? net.covering(c.from, c.to, wp) : std::set<std::int64_t>{-1};
      if (next == current) continue;
      out << "    wp " << start;
      if (wp - 1 != start) out << ".." << wp - 1;
      if (current.empty()) {
        out << ": uncovered\n";
      } else {
        out << ": UATM " << ints(current) << "\n";
      }
      start = wp;
      current = next;
    }
  }
  return out.str();
}

std::string render_agents(const std::vector<AgentSnapshot>& agents) {
  std::ostringstream out;
  if (agents.empty()) out << "no placed agents\n";
  for (const auto& a : agents) {
    out << "agent " << a.agent << " @ step " << a.step << ": vp" << a.corridor.first << " -> vp" << a.corridor.second
        << " wp " << a.waypoint;
    if (!a.plan.empty()) out << ", plan " << pairs(a.plan);
    if (a.target) out << ", target vp" << *a.target;
    out << "\n";
  }
  return out.str();
}

std::string render_outcome(const Outcome& o) {
  std::ostringstream out;
  if (const auto* d = std::get_if<DetourOutcome>(&o)) {
    out << "covered: " << ints(d->covered) << "\n";
    out << "uncovered: " << ints(d->uncovered) << "\n";
    out << "detour requests: " << pairs(d->detour_requests) << "\n";
    out << "route changes: " << pairs(d->route_changes) << "\n";
  } else {
    const auto& r = std::get<RoundTripOutcome>(o);
    out << "ahead: " << ints(r.ahead) << "\n";
    out << "covered by uatm2: " << ints(r.covered_by_uatm2) << "\n";
    out << "covered by other: " << ints(r.covered_by_other) << "\n";
    out << "round requests: " << triples(r.round_requests) << "\n";
    out << "round routes: " << triples(r.round_routes) << "\n";
  }
  return out.str();
}

std::string render_validation(const ValidationReport& r) {
  auto check = [](const char* name, const CheckResult& c) {
    return std::string(name) + " " + (c.passed ? "ok" : "FAIL (" + c.detail + ")");
  };
  return "validation: " + std::string(r.passed() ? "pass" : "fail") + " [" +
         check("rules", r.rule_satisfaction) + ", " + check("stability", r.stability) + ", " +
         check("reachability", r.reachability) + ", depth " + std::to_string(r.derivation_depth) + "]\n";
}

}  // namespace uamasp
