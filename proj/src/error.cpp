#include "uamasp/error.hpp"

namespace uamasp {
namespace {

std::string located(const std::string& msg, SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + msg;
}

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

LexError::LexError(const std::string& msg, SourcePos pos)
    : Error(located("lexical error: " + msg, pos)), pos_(pos) {}

ParseError::ParseError(const std::string& msg, SourcePos pos)
    : Error(located("syntax error: " + msg, pos)), pos_(pos) {}

SafetyError::SafetyError(const std::string& statement, std::vector<std::string> variables, SourcePos pos)
    : Error(located("unsafe variables [" + joined(variables) + "] in: " + statement, pos)),
      variables_(std::move(variables)),
      pos_(pos) {}

}  // namespace uamasp
