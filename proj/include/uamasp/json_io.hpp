#pragma once

#include <nlohmann/json.hpp>

#include "uamasp/dialogue.hpp"
#include "uamasp/network.hpp"
#include "uamasp/outcome.hpp"
#include "uamasp/solver.hpp"
#include "uamasp/validate.hpp"

namespace uamasp {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const VertiportNetwork& net);
nlohmann::json to_json(const std::vector<AgentSnapshot>& agents);
nlohmann::json to_json(const Outcome& o);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const DialogueTurn& t);
nlohmann::json to_json(const std::vector<DialogueTurn>& turns);
nlohmann::json atoms_json(const std::vector<GroundAtom>& atoms);

}  // namespace uamasp
