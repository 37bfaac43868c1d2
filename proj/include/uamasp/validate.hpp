#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "uamasp/ground_program.hpp"
#include "uamasp/scenario.hpp"
#include "uamasp/solver.hpp"

namespace uamasp {

struct CheckResult {
  bool passed = true;
  std::string detail;
};

/// Independent answer check: every ground rule satisfied, the model equals
/// the least model of its reduct, and every atom has a finite derivation
/// from facts through rules of the reduct.
struct ValidationReport {
  std::size_t model_id = 0;
  CheckResult rule_satisfaction;
  CheckResult stability;
  CheckResult reachability;
  std::size_t derivation_depth = 0;

  bool passed() const { return rule_satisfaction.passed && stability.passed && reachability.passed; }
};

/// Model given as ground atoms; atoms missing from the symbol table can
/// never be derived and fail stability and reachability.
ValidationReport validate_answer_set(const GroundProgram& g, const std::vector<GroundAtom>& model,
                                     std::size_t model_id = 1);
ValidationReport validate_answer_set(const GroundProgram& g, const AnswerSet& m, std::size_t model_id = 1);

/// Grounds the scenario and checks the model against it; `m` must come from
/// solving that same grounding.
ValidationReport validate_answer_set(const Scenario& s, const AnswerSet& m, std::size_t model_id = 1);

}  // namespace uamasp
