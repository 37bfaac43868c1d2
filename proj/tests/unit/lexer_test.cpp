#include <doctest/doctest.h>

#include "helpers.hpp"
#include "uamasp/lexer.hpp"

using namespace uamasp;

TEST_SUITE("lexer") {

TEST_CASE("interval fact") {
  auto t = tokenize("uatm(1..3).");
  std::vector<TokenKind> kinds;
  for (const auto& tok : t) kinds.push_back(tok.kind);
  CHECK(kinds == std::vector<TokenKind>{TokenKind::Identifier, TokenKind::LParen, TokenKind::Integer, TokenKind::DotDot,
                                        TokenKind::Integer, TokenKind::RParen, TokenKind::Period});
  CHECK(t[0].lexeme == "uatm");
  CHECK(t[2].lexeme == "1");
  CHECK(t[4].lexeme == "3");
}

TEST_CASE("empty input") { CHECK(tokenize("").empty()); }

TEST_CASE("unknown character reports its position") {
  try {
    tokenize("p(@).");
    FAIL("expected a lexical error");
  } catch (const LexError& e) {
    CHECK(e.pos().line == 1);
    CHECK(e.pos().column == 3);
  }
  CHECK_THROWS_AS(tokenize("p(X) :- q(X) ! r."), LexError);
  CHECK_THROWS_AS(tokenize("#minimize{X}."), LexError);
}

TEST_CASE("operators and keywords") {
  auto t = tokenize(":- : ; { } < <= > >= = == != + - * / not #count #show _ _x X x 42 %c\n");
  std::vector<TokenKind> kinds;
  for (const auto& tok : t) kinds.push_back(tok.kind);
  CHECK(kinds == std::vector<TokenKind>{
                     TokenKind::If, TokenKind::Colon, TokenKind::Semicolon, TokenKind::LBrace, TokenKind::RBrace,
                     TokenKind::Lt, TokenKind::Le, TokenKind::Gt, TokenKind::Ge, TokenKind::Eq, TokenKind::EqEq,
                     TokenKind::Ne, TokenKind::Plus, TokenKind::Minus, TokenKind::Star, TokenKind::Slash,
                     TokenKind::Not, TokenKind::Count, TokenKind::Show, TokenKind::Anonymous, TokenKind::Anonymous,
                     TokenKind::Variable, TokenKind::Identifier, TokenKind::Integer});
}

TEST_CASE("comments are skipped and lines counted") {
  auto t = tokenize("% header\np. % trailing\n  q.");
  REQUIRE(t.size() == 4);
  CHECK(t[0].pos.line == 2);
  CHECK(t[2].lexeme == "q");
  CHECK(t[2].pos.line == 3);
  CHECK(t[2].pos.column == 3);
}

TEST_CASE("positions strictly increase on every scenario file") {
  for (const char* stem : {"env_info", "agent_info1", "agent_info2", "query01", "query02", "query03", "query04",
                           "query05"}) {
    auto t = tokenize(testing::scenario_file(stem));
    REQUIRE(!t.empty());
    for (std::size_t i = 1; i < t.size(); ++i) {
      bool after = t[i].pos.line > t[i - 1].pos.line ||
                   (t[i].pos.line == t[i - 1].pos.line && t[i].pos.column > t[i - 1].pos.column);
      CHECK_MESSAGE(after, stem << " token " << i);
    }
  }
}

}
