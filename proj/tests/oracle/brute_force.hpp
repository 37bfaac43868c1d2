#pragma once

#include <random>
#include <set>
#include <vector>

#include "uamasp/ground_program.hpp"

namespace oracle {

using Model = std::vector<uamasp::AtomId>;

/// Stability by definition: the set satisfies every rule and equals the
/// least model of its reduct.
bool is_answer_set(const uamasp::GroundProgram& g, const std::vector<char>& in);

/// All answer sets by trying every subset of atoms. Only for tiny programs.
std::set<Model> brute_force_models(const uamasp::GroundProgram& g);

struct RandomSpec {
  int base_atoms = 8;       // a0..: normal, choice and constraint rules
  int count_atoms = 2;      // c0..: heads of count rules over base atoms only
  int normal_rules = 6;
  int choice_rules = 2;
  int constraints = 2;
  int count_rules = 2;
};

/// Counts never depend on their own heads, so aggregates stay non-recursive.
uamasp::GroundProgram random_program(std::mt19937& rng, const RandomSpec& shape);

}  // namespace oracle
