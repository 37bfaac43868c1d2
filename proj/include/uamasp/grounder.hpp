#pragma once

#include <map>
#include <string>
#include <vector>

#include "uamasp/ast.hpp"
#include "uamasp/ground_program.hpp"

namespace uamasp {

using Binding = std::map<std::string, Value>;

struct SafetyResult {
  bool safe = true;
  std::vector<std::string> unsafe_variables;  // sorted, unique
};

/// A variable is bound by a direct argument of a positive body atom, by a
/// choice/count element condition atom (locally to that element), or as an
/// aggregate target. Anonymous variables inside negative literals are
/// projected away and need no binding.
SafetyResult check_safety(const Statement& statement);

/// Exact integer arithmetic; division truncates toward zero. Throws EvalError
/// for unbound variables, division by zero, or arithmetic over symbols.
Value evaluate_term(const Term& t, const Binding& binding);

bool compare_values(const Value& left, CmpOp op, const Value& right);

/// Instantiates a program bottom-up into a variable-free program.
/// Throws SafetyError or GroundingError.
GroundProgram ground(const Program& program);

}  // namespace uamasp
