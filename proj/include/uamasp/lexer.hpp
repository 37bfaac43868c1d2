#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "uamasp/error.hpp"

namespace uamasp {

enum class TokenKind {
  Identifier,  // lowercase-initial name
  Variable,    // uppercase-initial name
  Anonymous,   // `_` or `_name`
  Integer,
  DotDot,
  If,  // :-
  Colon,
  Semicolon,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Comma,
  Period,
  Lt,
  Le,
  Gt,
  Ge,
  Eq,    // =
  EqEq,  // ==
  Ne,
  Plus,
  Minus,
  Star,
  Slash,
  Not,
  Count,  // #count
  Show,   // #show
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  SourcePos pos;
};

const char* token_kind_name(TokenKind kind);

/// Splits source text into tokens; `%` comments and whitespace are skipped.
/// Throws LexError on a character outside the token alphabet.
std::vector<Token> tokenize(std::string_view source);

}  // namespace uamasp
