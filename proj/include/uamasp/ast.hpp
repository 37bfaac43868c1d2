#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "uamasp/error.hpp"

namespace uamasp {

enum class ArithOp { Add, Sub, Mul, Div };
enum class CmpOp { Lt, Le, Gt, Ge, Eq, Ne };

/// Non-ground term of the dialect. Children of arithmetic terms are shared
/// and immutable, so copying a Term is cheap.
class Term {
 public:
  enum class Kind { Integer, Symbol, Variable, Anonymous, Binary };

  static Term integer(std::int64_t v);
  static Term symbol(std::string name);
  static Term variable(std::string name);
  // Anonymous variables keep a unique name ("_1", "_2", ...) assigned by the parser.
  static Term anonymous(std::string name);
  static Term binary(ArithOp op, Term left, Term right);

  Kind kind() const { return kind_; }
  std::int64_t value() const { return value_; }
  const std::string& name() const { return name_; }
  ArithOp op() const { return op_; }
  const Term& left() const { return *left_; }
  const Term& right() const { return *right_; }

  bool is_variable() const { return kind_ == Kind::Variable || kind_ == Kind::Anonymous; }
  bool is_ground() const;
  void collect_variables(std::vector<std::string>& out) const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  Kind kind_ = Kind::Integer;
  std::int64_t value_ = 0;
  std::string name_;
  ArithOp op_ = ArithOp::Add;
  std::shared_ptr<const Term> left_;
  std::shared_ptr<const Term> right_;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  std::size_t arity() const { return args.size(); }
  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Comparison {
  Term left;
  CmpOp op = CmpOp::Eq;
  Term right;
  friend bool operator==(const Comparison&, const Comparison&) = default;
};

struct Literal {
  enum class Kind { Positive, Negative, Comparison };

  Kind kind = Kind::Positive;
  Atom atom;              // Positive / Negative
  Comparison comparison;  // Comparison

  static Literal positive(Atom a) { return {Kind::Positive, std::move(a), {}}; }
  static Literal negative(Atom a) { return {Kind::Negative, std::move(a), {}}; }
  static Literal compare(Term l, CmpOp op, Term r) {
    return {Kind::Comparison, {}, Comparison{std::move(l), op, std::move(r)}};
  }
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

using FactArg = std::variant<Term, Interval>;

struct IntervalAtom {
  std::string predicate;
  std::vector<FactArg> args;

  bool has_interval() const;
  friend bool operator==(const IntervalAtom&, const IntervalAtom&) = default;
};

struct ChoiceElement {
  Atom head;
  std::vector<Literal> condition;
  friend bool operator==(const ChoiceElement&, const ChoiceElement&) = default;
};

struct ChoiceRule {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::vector<ChoiceElement> elements;
  std::vector<Literal> body;
  friend bool operator==(const ChoiceRule&, const ChoiceRule&) = default;
};

struct CountElement {
  std::vector<Term> tuple;
  std::vector<Literal> condition;
  friend bool operator==(const CountElement&, const CountElement&) = default;
};

/// `Target = #count{ tuple : condition; ... }`
struct AggregateAssignment {
  Term target;
  std::vector<CountElement> elements;
  friend bool operator==(const AggregateAssignment&, const AggregateAssignment&) = default;
};

using BodyElement = std::variant<Literal, AggregateAssignment>;

struct Fact {
  IntervalAtom atom;
  friend bool operator==(const Fact&, const Fact&) = default;
};

struct Rule {
  Atom head;
  std::vector<BodyElement> body;
  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Constraint {
  std::vector<Literal> body;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct ShowDirective {
  std::string predicate;
  std::size_t arity = 0;
  friend bool operator==(const ShowDirective&, const ShowDirective&) = default;
};

struct Statement {
  std::variant<Fact, Rule, ChoiceRule, Constraint, ShowDirective> node;
  SourcePos pos;

  // Source positions are not part of structural identity.
  friend bool operator==(const Statement& a, const Statement& b) { return a.node == b.node; }
};

struct Program {
  std::vector<Statement> statements;

  void append(const Program& other);
  friend bool operator==(const Program&, const Program&) = default;
};

/// Structural equality up to a consistent renaming of anonymous variables.
bool equal_modulo_anonymous(const Program& a, const Program& b);

}  // namespace uamasp
