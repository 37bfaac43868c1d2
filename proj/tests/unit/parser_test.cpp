#include <doctest/doctest.h>

#include <regex>

#include "helpers.hpp"
#include "uamasp/parser.hpp"

using namespace uamasp;

namespace {

const Statement& only(const Program& p) {
  REQUIRE(p.statements.size() == 1);
  return p.statements.front();
}

// Statement terminators: a period not part of `..`.
std::size_t count_terminators(const std::string& text) {
  static const std::regex period(R"((^|[^.])\.(?!\.))");
  return std::distance(std::sregex_iterator(text.begin(), text.end(), period), std::sregex_iterator());
}

}  // namespace

TEST_SUITE("parser") {

TEST_CASE("rule with two positive literals") {
  auto p = parse_program("covered_agent(A, TM) :- loc(A, T, U, V, WP), covered_wp(U, V, TM, WP).");
  const auto& rule = std::get<Rule>(only(p).node);
  CHECK(rule.head.predicate == "covered_agent");
  CHECK(rule.head.arity() == 2);
  REQUIRE(rule.body.size() == 2);
  for (const auto& b : rule.body) {
    const auto& lit = std::get<Literal>(b);
    CHECK(lit.kind == Literal::Kind::Positive);
  }
  CHECK(std::get<Literal>(rule.body[1]).atom.predicate == "covered_wp");
}

TEST_CASE("choice rule with bounds, condition and body") {
  auto p = parse_program("1{loc(A, 1, 1, 2, WP): edge_range(1, 2, WP)}1 :- agent(A), A <= 6.");
  const auto& c = std::get<ChoiceRule>(only(p).node);
  CHECK(c.lower == 1);
  CHECK(c.upper == 1);
  REQUIRE(c.elements.size() == 1);
  CHECK(c.elements[0].head.predicate == "loc");
  REQUIRE(c.elements[0].condition.size() == 1);
  CHECK(c.elements[0].condition[0].atom.predicate == "edge_range");
  REQUIRE(c.body.size() == 2);
  CHECK(c.body[0].kind == Literal::Kind::Positive);
  CHECK(c.body[0].atom.predicate == "agent");
  CHECK(c.body[1].kind == Literal::Kind::Comparison);
  CHECK(c.body[1].comparison.op == CmpOp::Le);
}

TEST_CASE("truncated rule") {
  try {
    parse_program("p(X) :-");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unexpected end of input") != std::string::npos);
    CHECK(e.pos().line == 1);
  }
}

TEST_CASE("syntax errors carry a position inside the source") {
  for (const char* bad : {"p(1", "p(1) q.", ":- .", "1{p(1)}.", "2{p(1)}1.", "p(f(1)).", "p(X) :- q(1..3).",
                          "#show p.", "p :- N = #count{X: q(X)} + 1."}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_program(bad), ParseError);
  }
  try {
    parse_program("p.\nq(1) :- r(1) s(1).");
  } catch (const ParseError& e) {
    CHECK(e.pos().line == 2);
    CHECK(e.pos().column == 14);
  }
}

TEST_CASE("aggregate assignment") {
  auto p = parse_program(
      "u1_only(N) :- N = #count{A:uatm1_wps(WP), not uatm2_wps(WP), loc(A, 1, 1, 2, WP), agent(A)}.");
  const auto& rule = std::get<Rule>(only(p).node);
  REQUIRE(rule.body.size() == 1);
  const auto& agg = std::get<AggregateAssignment>(rule.body[0]);
  CHECK(agg.target == Term::variable("N"));
  REQUIRE(agg.elements.size() == 1);
  CHECK(agg.elements[0].tuple == std::vector<Term>{Term::variable("A")});
  REQUIRE(agg.elements[0].condition.size() == 4);
  CHECK(agg.elements[0].condition[1].kind == Literal::Kind::Negative);
}

TEST_CASE("both equality spellings are comparisons") {
  auto a = parse_program(":- u1_only(N), N = 0.");
  auto b = parse_program(":- u1_only(N), N == 0.");
  CHECK(a == b);
  CHECK(std::get<Constraint>(only(a).node).body[1].comparison.op == CmpOp::Eq);
}

TEST_CASE("arithmetic precedence and associativity") {
  auto p = parse_program("p(X - 1 - 2 + Y * 3 / 4) :- q(X, Y).");
  const Term& t = std::get<Rule>(only(p).node).head.args[0];
  // ((X - 1) - 2) + ((Y * 3) / 4)
  REQUIRE(t.kind() == Term::Kind::Binary);
  CHECK(t.op() == ArithOp::Add);
  CHECK(t.left().op() == ArithOp::Sub);
  CHECK(t.left().left().op() == ArithOp::Sub);
  CHECK(t.right().op() == ArithOp::Div);
  CHECK(t.right().left().op() == ArithOp::Mul);
}

TEST_CASE("anonymous variables get distinct names") {
  auto p = parse_program("q(A) :- p(A, _, _).");
  const auto& args = std::get<Literal>(std::get<Rule>(only(p).node).body[0]).atom.args;
  CHECK(args[1].kind() == Term::Kind::Anonymous);
  CHECK(args[2].kind() == Term::Kind::Anonymous);
  CHECK(args[1].name() != args[2].name());
}

TEST_CASE("show directive arity must match usage") {
  CHECK_THROWS_AS(parse_program("p(1). #show p/2."), ArityError);
  CHECK_NOTHROW(parse_program("p(1). #show p/1."));
  CHECK_NOTHROW(parse_program("p. #show p/0."));
  auto p = parse_program("#show covered_by_uatm1/1. covered_by_uatm1(1).");
  const auto& show = std::get<ShowDirective>(p.statements[0].node);
  CHECK(show.predicate == "covered_by_uatm1");
  CHECK(show.arity == 1);
}

TEST_CASE("every scenario file parses, one statement per terminator") {
  for (const char* stem : {"env_info", "agent_info1", "agent_info2", "query01", "query02", "query03", "query04",
                           "query05"}) {
    CAPTURE(stem);
    std::string text = testing::scenario_file(stem);
    Program p = parse_program(text);
    CHECK(p.statements.size() == count_terminators(text));
  }
}

TEST_CASE("statement kinds of the environment") {
  auto p = parse_program(testing::scenario_file("env_info"));
  std::size_t facts = 0, rules = 0;
  for (const auto& s : p.statements) {
    facts += std::holds_alternative<Fact>(s.node);
    rules += std::holds_alternative<Rule>(s.node);
  }
  CHECK(facts == 15);
  CHECK(rules == 6);
}

TEST_CASE("symbolic constants") {
  auto p = parse_program("color(red). ok(X) :- color(X), X != blue.");
  CHECK(p.statements.size() == 2);
}

}
