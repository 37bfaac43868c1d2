#pragma once

#include <string_view>

#include "uamasp/ast.hpp"

namespace uamasp {

/// Parses a program in the dialect. Throws LexError, ParseError or ArityError.
Program parse_program(std::string_view source);

}  // namespace uamasp
