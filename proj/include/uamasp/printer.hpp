#pragma once

#include <string>

#include "uamasp/ast.hpp"

namespace uamasp {

std::string print_term(const Term& t);
std::string print_atom(const Atom& a);
std::string print_literal(const Literal& l);
std::string print_statement(const Statement& s);

/// One statement per line; the output reparses to a structurally equal program.
std::string print_program(const Program& p);

const char* cmp_op_text(CmpOp op);

}  // namespace uamasp
