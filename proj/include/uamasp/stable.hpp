#pragma once

#include <string>
#include <vector>

#include "uamasp/ground_program.hpp"

namespace uamasp {

/// Choice-free form of a ground program. Every choice head `a` gets a hidden
/// complement atom `a*` (id >= original_atoms) and the pair
///   a :- B, C, not a*.      a* :- B, C, not a.
/// Constraints, bounds and aggregate rules are kept aside.
struct NormalizedProgram {
  std::size_t original_atoms = 0;
  std::size_t total_atoms = 0;
  std::vector<NormalRule> rules;
  std::vector<AtomId> complement_of;  // original atom id -> complement id, or npos
  std::vector<const AggregateRule*> aggregates;

  static constexpr AtomId npos = static_cast<AtomId>(-1);
};

NormalizedProgram normalize_choices(const GroundProgram& g);

struct DefiniteRule {
  AtomId head = 0;
  std::vector<AtomId> body;
};

struct DefiniteProgram {
  std::size_t atom_count = 0;
  std::vector<DefiniteRule> rules;
};

/// Gelfond-Lifschitz reduct of the normalized program. Complements are read
/// as true exactly for choice atoms outside the candidate. An aggregate rule
/// survives as `head :- pos` when its negative body is clear of the candidate
/// and its count, evaluated in the candidate, equals the required value.
DefiniteProgram gl_reduct(const GroundProgram& g, const std::vector<AtomId>& candidate);
DefiniteProgram gl_reduct(const NormalizedProgram& n, const std::vector<AtomId>& candidate);

/// Least model by immediate-consequence fixpoint; returned ids are sorted.
std::vector<AtomId> least_model(const DefiniteProgram& p);

/// Number of distinct tuples whose condition holds in the candidate.
std::int64_t eval_aggregate(const std::vector<GroundCountElement>& elements, const std::vector<char>& member);
std::int64_t eval_aggregate(const std::vector<GroundCountElement>& elements, const std::vector<AtomId>& candidate);

struct StabilityCheck {
  bool stable = false;
  std::string diagnosis;  // first violated rule or unfounded atom, empty when stable

  explicit operator bool() const { return stable; }
};

StabilityCheck is_stable(const GroundProgram& g, const std::vector<AtomId>& candidate);

std::vector<char> membership(std::size_t atom_count, const std::vector<AtomId>& atoms);

}  // namespace uamasp
