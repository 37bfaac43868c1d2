#include "uamasp/parser.hpp"

#include <charconv>
#include <map>
#include <set>

#include "uamasp/lexer.hpp"

namespace uamasp {
namespace {

SourcePos end_position(std::string_view src) {
  SourcePos p;
  for (char c : src) {
    if (c == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

bool is_comparison(TokenKind k) {
  switch (k) {
    case TokenKind::Lt:
    case TokenKind::Le:
    case TokenKind::Gt:
    case TokenKind::Ge:
    case TokenKind::Eq:
    case TokenKind::EqEq:
    case TokenKind::Ne:
      return true;
    default:
      return false;
  }
}

bool is_arithmetic(TokenKind k) {
  return k == TokenKind::Plus || k == TokenKind::Minus || k == TokenKind::Star || k == TokenKind::Slash;
}

CmpOp to_cmp(TokenKind k) {
  switch (k) {
    case TokenKind::Lt: return CmpOp::Lt;
    case TokenKind::Le: return CmpOp::Le;
    case TokenKind::Gt: return CmpOp::Gt;
    case TokenKind::Ge: return CmpOp::Ge;
    case TokenKind::Ne: return CmpOp::Ne;
    default: return CmpOp::Eq;
  }
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, SourcePos eof) : toks_(std::move(tokens)), eof_(eof) {
    for (const auto& t : toks_) {
      if (t.kind == TokenKind::Anonymous && t.lexeme != "_") taken_.insert(t.lexeme);
    }
  }

  Program run() {
    Program p;
    while (!at_end()) p.statements.push_back(statement());
    check_show_arities(p);
    return p;
  }

 private:
  // -- token helpers ---------------------------------------------------------

  bool at_end() const { return i_ >= toks_.size(); }
  bool check(TokenKind k, std::size_t ahead = 0) const {
    return i_ + ahead < toks_.size() && toks_[i_ + ahead].kind == k;
  }
  const Token& peek() const { return toks_[i_]; }
  SourcePos here() const { return at_end() ? eof_ : toks_[i_].pos; }

  [[noreturn]] void fail(const std::string& expected) const {
    if (at_end()) throw ParseError("unexpected end of input, expected " + expected, eof_);
    throw ParseError("expected " + expected + ", found '" + peek().lexeme + "'", peek().pos);
  }

  const Token& expect(TokenKind k) {
    if (!check(k)) fail(token_kind_name(k));
    return toks_[i_++];
  }

  bool accept(TokenKind k) {
    if (!check(k)) return false;
    ++i_;
    return true;
  }

  std::int64_t integer_token() {
    const Token& t = expect(TokenKind::Integer);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.lexeme.data(), t.lexeme.data() + t.lexeme.size(), v);
    if (ec != std::errc()) throw ParseError("integer out of range '" + t.lexeme + "'", t.pos);
    return v;
  }

  std::string fresh_anonymous() {
    std::string name;
    do {
      name = "_" + std::to_string(++anon_counter_);
    } while (taken_.count(name));
    return name;
  }

  // -- statements ------------------------------------------------------------

  Statement statement() {
    const SourcePos pos = here();
    if (accept(TokenKind::Show)) {
      ShowDirective s;
      s.predicate = expect(TokenKind::Identifier).lexeme;
      expect(TokenKind::Slash);
      s.arity = static_cast<std::size_t>(integer_token());
      expect(TokenKind::Period);
      return {s, pos};
    }
    if (accept(TokenKind::If)) {
      Constraint c{literals_until_period()};
      return {std::move(c), pos};
    }
    if (check(TokenKind::Integer) || check(TokenKind::LBrace)) return {choice(), pos};
    if (!check(TokenKind::Identifier)) fail("statement");

    IntervalAtom head = head_atom();
    if (accept(TokenKind::Period)) return {Fact{std::move(head)}, pos};
    const SourcePos if_pos = here();
    expect(TokenKind::If);
    if (head.has_interval()) throw ParseError("intervals are only allowed in facts", if_pos);
    Rule r;
    r.head.predicate = head.predicate;
    for (auto& a : head.args) r.head.args.push_back(std::get<Term>(a));
    r.body = rule_body();
    return {std::move(r), pos};
  }

  ChoiceRule choice() {
    ChoiceRule c;
    if (!check(TokenKind::Integer)) fail("lower bound before '{'");
    c.lower = integer_token();
    expect(TokenKind::LBrace);
    do {
      ChoiceElement e;
      e.head = atom();
      if (accept(TokenKind::Colon)) e.condition = literal_list();
      c.elements.push_back(std::move(e));
    } while (accept(TokenKind::Semicolon));
    expect(TokenKind::RBrace);
    if (!check(TokenKind::Integer)) fail("upper bound after '}'");
    const SourcePos ub = here();
    c.upper = integer_token();
    if (c.lower > c.upper) throw ParseError("choice lower bound exceeds upper bound", ub);
    if (accept(TokenKind::If)) {
      c.body = literals_until_period();
    } else {
      expect(TokenKind::Period);
    }
    return c;
  }

  std::vector<Literal> literals_until_period() {
    std::vector<Literal> out = literal_list();
    expect(TokenKind::Period);
    return out;
  }

  std::vector<BodyElement> rule_body() {
    std::vector<BodyElement> out;
    do {
      if (check(TokenKind::Variable) && (check(TokenKind::Eq, 1) || check(TokenKind::EqEq, 1)) &&
          check(TokenKind::Count, 2)) {
        out.emplace_back(aggregate());
      } else {
        out.emplace_back(literal());
      }
    } while (accept(TokenKind::Comma));
    expect(TokenKind::Period);
    return out;
  }

  AggregateAssignment aggregate() {
    AggregateAssignment agg;
    agg.target = Term::variable(expect(TokenKind::Variable).lexeme);
    ++i_;  // = or ==
    expect(TokenKind::Count);
    expect(TokenKind::LBrace);
    if (!check(TokenKind::RBrace)) {
      do {
        CountElement e;
        do {
          e.tuple.push_back(term());
        } while (accept(TokenKind::Comma));
        if (accept(TokenKind::Colon)) e.condition = literal_list();
        agg.elements.push_back(std::move(e));
      } while (accept(TokenKind::Semicolon));
    }
    expect(TokenKind::RBrace);
    return agg;
  }

  std::vector<Literal> literal_list() {
    std::vector<Literal> out;
    do {
      out.push_back(literal());
    } while (accept(TokenKind::Comma));
    return out;
  }

  Literal literal() {
    if (accept(TokenKind::Not)) return Literal::negative(atom());
    if (check(TokenKind::Identifier)) {
      const bool term_follows = i_ + 1 < toks_.size() &&
                                (is_comparison(toks_[i_ + 1].kind) || is_arithmetic(toks_[i_ + 1].kind));
      if (!term_follows) return Literal::positive(atom());
    }
    if (at_end()) fail("literal");
    Term left = term();
    if (at_end() || !is_comparison(peek().kind)) fail("comparison operator");
    const CmpOp op = to_cmp(toks_[i_++].kind);
    Term right = term();
    return Literal::compare(std::move(left), op, std::move(right));
  }

  // -- atoms and terms -------------------------------------------------------

  Atom atom() {
    Atom a;
    a.predicate = expect(TokenKind::Identifier).lexeme;
    if (accept(TokenKind::LParen)) {
      do {
        a.args.push_back(term());
      } while (accept(TokenKind::Comma));
      expect(TokenKind::RParen);
    }
    return a;
  }

  IntervalAtom head_atom() {
    IntervalAtom a;
    a.predicate = expect(TokenKind::Identifier).lexeme;
    if (accept(TokenKind::LParen)) {
      do {
        if (check(TokenKind::Integer) && check(TokenKind::DotDot, 1)) {
          const SourcePos p = here();
          Interval iv;
          iv.lo = integer_token();
          expect(TokenKind::DotDot);
          iv.hi = integer_token();
          if (iv.lo > iv.hi) throw ParseError("empty interval " + std::to_string(iv.lo) + ".." + std::to_string(iv.hi), p);
          a.args.emplace_back(iv);
        } else {
          a.args.emplace_back(term());
        }
      } while (accept(TokenKind::Comma));
      expect(TokenKind::RParen);
    }
    return a;
  }

  Term term() {
    Term t = product();
    while (check(TokenKind::Plus) || check(TokenKind::Minus)) {
      const ArithOp op = toks_[i_++].kind == TokenKind::Plus ? ArithOp::Add : ArithOp::Sub;
      t = Term::binary(op, std::move(t), product());
    }
    return t;
  }

  Term product() {
    Term t = primary();
    while (check(TokenKind::Star) || check(TokenKind::Slash)) {
      const ArithOp op = toks_[i_++].kind == TokenKind::Star ? ArithOp::Mul : ArithOp::Div;
      t = Term::binary(op, std::move(t), primary());
    }
    return t;
  }

  Term primary() {
    if (at_end()) fail("term");
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Integer:
        return Term::integer(integer_token());
      case TokenKind::Variable:
        ++i_;
        return Term::variable(t.lexeme);
      case TokenKind::Anonymous:
        ++i_;
        return Term::anonymous(t.lexeme == "_" ? fresh_anonymous() : t.lexeme);
      case TokenKind::Identifier:
        if (check(TokenKind::LParen, 1)) throw ParseError("function terms are not supported", t.pos);
        ++i_;
        return Term::symbol(t.lexeme);
      case TokenKind::LParen: {
        ++i_;
        Term inner = term();
        expect(TokenKind::RParen);
        return inner;
      }
      default:
        fail("term");
    }
  }

  // -- arity check -----------------------------------------------------------

  void check_show_arities(const Program& p) const {
    std::map<std::string, std::set<std::size_t>> used;
    auto note = [&](const std::string& pred, std::size_t n) { used[pred].insert(n); };
    auto note_lits = [&](const std::vector<Literal>& ls) {
      for (const auto& l : ls) {
        if (l.kind != Literal::Kind::Comparison) note(l.atom.predicate, l.atom.arity());
      }
    };
    for (const auto& s : p.statements) {
      if (const auto* f = std::get_if<Fact>(&s.node)) {
        note(f->atom.predicate, f->atom.args.size());
      } else if (const auto* r = std::get_if<Rule>(&s.node)) {
        note(r->head.predicate, r->head.arity());
        for (const auto& b : r->body) {
          if (const auto* l = std::get_if<Literal>(&b)) {
            note_lits({*l});
          } else {
            for (const auto& e : std::get<AggregateAssignment>(b).elements) note_lits(e.condition);
          }
        }
      } else if (const auto* c = std::get_if<ChoiceRule>(&s.node)) {
        for (const auto& e : c->elements) {
          note(e.head.predicate, e.head.arity());
          note_lits(e.condition);
        }
        note_lits(c->body);
      } else if (const auto* k = std::get_if<Constraint>(&s.node)) {
        note_lits(k->body);
      }
    }
    for (const auto& s : p.statements) {
      const auto* show = std::get_if<ShowDirective>(&s.node);
      if (!show) continue;
      auto it = used.find(show->predicate);
      if (it != used.end() && !it->second.count(show->arity)) {
        throw ArityError(std::to_string(s.pos.line) + ":" + std::to_string(s.pos.column) + ": #show " +
                         show->predicate + "/" + std::to_string(show->arity) +
                         " does not match any use of predicate '" + show->predicate + "'");
      }
    }
  }

  std::vector<Token> toks_;
  SourcePos eof_;
  std::size_t i_ = 0;
  std::size_t anon_counter_ = 0;
  std::set<std::string> taken_;
};

}  // namespace

Program parse_program(std::string_view source) {
  return Parser(tokenize(source), end_position(source)).run();
}

}  // namespace uamasp
