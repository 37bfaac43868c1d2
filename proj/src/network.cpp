#include "uamasp/network.hpp"

#include <algorithm>

#include "uamasp/error.hpp"
#include "uamasp/grounder.hpp"
#include "uamasp/solver.hpp"

namespace uamasp {

namespace {

std::int64_t arg(const GroundAtom& a, std::size_t i) {
  if (i >= a.args.size() || !a.args[i].is_integer()) {
    throw ScenarioError("environment atom " + a.to_string() + " is not an integer tuple");
  }
  return a.args[i].as_integer();
}

}  // namespace

const Corridor* VertiportNetwork::find_corridor(std::int64_t from, std::int64_t to) const {
  auto it = std::find_if(corridors.begin(), corridors.end(),
                         [&](const Corridor& c) { return c.from == from && c.to == to; });
  return it == corridors.end() ? nullptr : &*it;
}

std::set<std::int64_t> VertiportNetwork::covering(std::int64_t from, std::int64_t to, std::int64_t waypoint) const {
  auto c = coverage.find({from, to});
  if (c == coverage.end()) return {};
  auto w = c->second.find(waypoint);
  return w == c->second.end() ? std::set<std::int64_t>{} : w->second;
}

std::vector<std::int64_t> VertiportNetwork::covered_exactly_by(std::int64_t from, std::int64_t to,
                                                               const std::set<std::int64_t>& by) const {
  std::vector<std::int64_t> out;
  const Corridor* c = find_corridor(from, to);
  if (!c) return out;
  for (std::int64_t wp = 1; wp <= c->waypoints; ++wp) {
    if (covering(from, to, wp) == by) out.push_back(wp);
  }
  return out;
}

std::vector<std::int64_t> VertiportNetwork::uncovered(std::int64_t from, std::int64_t to) const {
  return covered_exactly_by(from, to, {});
}

VertiportNetwork build_network_view(const Program& environment) {
  GroundProgram g = ground(environment);
  SolveOptions options;
  options.max_models = 2;
  SolveResult r = solve(g, options);
  if (r.models.size() != 1) {
    throw ScenarioError("environment must have exactly one model, found " +
                        std::string(r.models.empty() ? "none" : "several"));
  }

  VertiportNetwork net;
  std::map<CorridorKey, std::int64_t> ranges;
  for (AtomId id : r.models.front().atoms) {
    const GroundAtom& a = g.atoms.atom(id);
    const auto n = a.args.size();
    if (a.predicate == "vp" && n == 1) {
      net.vertiports.push_back(arg(a, 0));
    } else if (a.predicate == "uatm" && n == 1) {
      net.uatms.push_back(arg(a, 0));
    } else if (a.predicate == "edge" && n == 2) {
      net.corridors.push_back(Corridor{arg(a, 0), arg(a, 1), 0});
    } else if (a.predicate == "edge_range" && n == 3) {
      auto& count = ranges[{arg(a, 0), arg(a, 1)}];
      count = std::max(count, arg(a, 2));
    } else if (a.predicate == "covered_wp" && n == 4) {
      net.coverage[{arg(a, 0), arg(a, 1)}][arg(a, 3)].insert(arg(a, 2));
    } else if (a.predicate == "cover" && n == 2) {
      net.ownership[arg(a, 0)].insert(arg(a, 1));
    }
  }
  std::sort(net.vertiports.begin(), net.vertiports.end());
  std::sort(net.uatms.begin(), net.uatms.end());
  std::sort(net.corridors.begin(), net.corridors.end(),
            [](const Corridor& a, const Corridor& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  for (const auto& [key, count] : ranges) {
    auto it = std::find_if(net.corridors.begin(), net.corridors.end(),
                           [&](const Corridor& c) { return c.from == key.first && c.to == key.second; });
    if (it == net.corridors.end()) {
      throw ScenarioError("edge_range for " + std::to_string(key.first) + "-" + std::to_string(key.second) +
                          " has no matching edge");
    }
    it->waypoints = count;
  }
  return net;
}

}  // namespace uamasp
