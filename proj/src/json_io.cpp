#include "uamasp/json_io.hpp"

namespace uamasp {

using nlohmann::json;

namespace {

template <class Set>
json pair_list(const Set& s) {
  json out = json::array();
  for (const auto& [a, b] : s) out.push_back({a, b});
  return out;
}

template <class Set>
json triple_list(const Set& s) {
  json out = json::array();
  for (const auto& [a, b, c] : s) out.push_back({a, b, c});
  return out;
}

json check_json(const CheckResult& c) { return {{"passed", c.passed}, {"detail", c.detail}}; }

}  // namespace

json to_json(const VertiportNetwork& net) {
  json corridors = json::array();
  for (const auto& c : net.corridors) {
    json bands = json::array();
    std::int64_t start = 1;
    for (std::int64_t wp = 1; wp <= c.waypoints; ++wp) {
      auto cover = net.covering(c.from, c.to, wp);
      if (wp < c.waypoints && net.covering(c.from, c.to, wp + 1) == cover) continue;
      bands.push_back({{"from_wp", start}, {"to_wp", wp}, {"uatms", cover}});
      start = wp + 1;
    }
    corridors.push_back({{"from", c.from}, {"to", c.to}, {"waypoints", c.waypoints}, {"coverage", bands}});
  }
  json ownership = json::object();
  for (const auto& [uatm, vps] : net.ownership) ownership[std::to_string(uatm)] = vps;
  return {{"vertiports", net.vertiports}, {"uatms", net.uatms}, {"corridors", corridors}, {"ownership", ownership}};
}

json to_json(const std::vector<AgentSnapshot>& agents) {
  json out = json::array();
  for (const auto& a : agents) {
    out.push_back({{"agent", a.agent},
                   {"step", a.step},
                   {"corridor", {a.corridor.first, a.corridor.second}},
                   {"waypoint", a.waypoint},
                   {"plan", pair_list(a.plan)},
                   {"target", a.target ? json(*a.target) : json(nullptr)}});
  }
  return out;
}

json to_json(const Outcome& o) {
  if (const auto* d = std::get_if<DetourOutcome>(&o)) {
    return {{"kind", "detour"},
            {"covered", d->covered},
            {"uncovered", d->uncovered},
            {"detour_requests", pair_list(d->detour_requests)},
            {"route_changes", pair_list(d->route_changes)}};
  }
  const auto& r = std::get<RoundTripOutcome>(o);
  return {{"kind", "round_trip"},
          {"ahead", r.ahead},
          {"covered_by_uatm2", r.covered_by_uatm2},
          {"covered_by_other", r.covered_by_other},
          {"round_requests", triple_list(r.round_requests)},
          {"round_routes", triple_list(r.round_routes)}};
}

json to_json(const ValidationReport& r) {
  return {{"model_id", r.model_id},
          {"passed", r.passed()},
          {"rule_satisfaction", check_json(r.rule_satisfaction)},
          {"stability", check_json(r.stability)},
          {"reachability", check_json(r.reachability)},
          {"derivation_depth", r.derivation_depth}};
}

json to_json(const DialogueTurn& t) {
  return {{"actor", actor_name(t.actor)},
          {"utterance", t.utterance},
          {"query", t.query ? json(*t.query) : json(nullptr)},
          {"outcome", t.outcome ? to_json(*t.outcome) : json(nullptr)},
          {"relayed", t.outcome ? json(relayed_agents(*t.outcome)) : json::array()},
          {"error", t.error}};
}

json to_json(const std::vector<DialogueTurn>& turns) {
  json out = json::array();
  for (const auto& t : turns) out.push_back(to_json(t));
  return out;
}

json atoms_json(const std::vector<GroundAtom>& atoms) {
  json out = json::array();
  for (const auto& a : atoms) out.push_back(a.to_string());
  return out;
}

}  // namespace uamasp
