#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "uamasp/ast.hpp"

namespace uamasp {

using CorridorKey = std::pair<std::int64_t, std::int64_t>;

struct Corridor {
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t waypoints = 0;  // size of edge_range, 0 when the corridor has none
};

struct VertiportNetwork {
  std::vector<std::int64_t> vertiports;
  std::vector<std::int64_t> uatms;
  std::vector<Corridor> corridors;
  std::map<CorridorKey, std::map<std::int64_t, std::set<std::int64_t>>> coverage;  // corridor -> waypoint -> uatms
  std::map<std::int64_t, std::set<std::int64_t>> ownership;                        // uatm -> vertiports (cover/2)

  const Corridor* find_corridor(std::int64_t from, std::int64_t to) const;
  std::set<std::int64_t> covering(std::int64_t from, std::int64_t to, std::int64_t waypoint) const;
  /// Waypoints of a corridor whose covering set equals `uatms` exactly.
  std::vector<std::int64_t> covered_exactly_by(std::int64_t from, std::int64_t to,
                                               const std::set<std::int64_t>& uatms) const;
  std::vector<std::int64_t> uncovered(std::int64_t from, std::int64_t to) const;
};

/// Reads vp, uatm, edge, edge_range, covered_wp and cover atoms of the
/// environment's unique model. Throws ScenarioError when the environment is
/// not definite or a ranged corridor has no edge.
VertiportNetwork build_network_view(const Program& environment);

}  // namespace uamasp
