#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uamasp/ground_program.hpp"

namespace uamasp {

struct AnswerSet {
  std::vector<AtomId> atoms;         // sorted ids of all true atoms
  std::vector<GroundAtom> projected; // shown atoms, sorted by (predicate, args)

  bool contains(const GroundProgram& g, const std::string& atom_text) const;
};

enum class SolveStatus { Satisfiable, Unsatisfiable };

const char* status_text(SolveStatus s);

struct SolveStats {
  std::size_t models = 0;
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  double wall_seconds = 0.0;
  double cpu_seconds = 0.0;
  double first_model_seconds = 0.0;
  double unsat_seconds = 0.0;  // time spent after the last model
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unsatisfiable;
  std::vector<AnswerSet> models;
  SolveStats stats;
  bool exhausted = false;  // search space fully explored
};

struct SolveOptions {
  std::size_t max_models = 1;  // 0 enumerates all models
  std::optional<std::uint64_t> decision_budget;
};

/// Enumerates stable models by a DPLL-style search: propagation over the
/// program completion, choice bounds and counts; decisions on the lowest
/// unassigned atom, true first; chronological backtracking. Every total
/// assignment is verified with is_stable before it is emitted.
/// Throws ResourceLimitError when the decision budget is exceeded.
SolveResult solve(const GroundProgram& g, const SolveOptions& options = {});

AnswerSet make_answer_set(const GroundProgram& g, std::vector<AtomId> atoms);

}  // namespace uamasp
