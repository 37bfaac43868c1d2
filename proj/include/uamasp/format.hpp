#pragma once

#include <string>
#include <vector>

#include "uamasp/network.hpp"
#include "uamasp/outcome.hpp"
#include "uamasp/solver.hpp"
#include "uamasp/validate.hpp"

namespace uamasp {

const char* version();
std::string banner();

/// Answer blocks, status line and the statistics block. "Models" carries a
/// "+" suffix unless the search space was exhausted.
std::string format_result(const SolveResult& r);

std::string join_ints(const std::vector<std::int64_t>& values, const char* sep = ", ");

std::string render_network(const VertiportNetwork& net);
std::string render_agents(const std::vector<AgentSnapshot>& agents);
std::string render_outcome(const Outcome& o);
std::string render_validation(const ValidationReport& r);

}  // namespace uamasp
