#include "uamasp/ast.hpp"

#include <map>

namespace uamasp {

Term Term::integer(std::int64_t v) {
  Term t;
  t.kind_ = Kind::Integer;
  t.value_ = v;
  return t;
}

Term Term::symbol(std::string name) {
  Term t;
  t.kind_ = Kind::Symbol;
  t.name_ = std::move(name);
  return t;
}

Term Term::variable(std::string name) {
  Term t;
  t.kind_ = Kind::Variable;
  t.name_ = std::move(name);
  return t;
}

Term Term::anonymous(std::string name) {
  Term t;
  t.kind_ = Kind::Anonymous;
  t.name_ = std::move(name);
  return t;
}

Term Term::binary(ArithOp op, Term left, Term right) {
  Term t;
  t.kind_ = Kind::Binary;
  t.op_ = op;
  t.left_ = std::make_shared<const Term>(std::move(left));
  t.right_ = std::make_shared<const Term>(std::move(right));
  return t;
}

bool Term::is_ground() const {
  switch (kind_) {
    case Kind::Integer:
    case Kind::Symbol:
      return true;
    case Kind::Variable:
    case Kind::Anonymous:
      return false;
    case Kind::Binary:
      return left_->is_ground() && right_->is_ground();
  }
  return false;
}

void Term::collect_variables(std::vector<std::string>& out) const {
  if (is_variable()) {
    out.push_back(name_);
  } else if (kind_ == Kind::Binary) {
    left_->collect_variables(out);
    right_->collect_variables(out);
  }
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Term::Kind::Integer:
      return a.value_ == b.value_;
    case Term::Kind::Symbol:
    case Term::Kind::Variable:
    case Term::Kind::Anonymous:
      return a.name_ == b.name_;
    case Term::Kind::Binary:
      return a.op_ == b.op_ && *a.left_ == *b.left_ && *a.right_ == *b.right_;
  }
  return false;
}

bool IntervalAtom::has_interval() const {
  for (const auto& a : args) {
    if (std::holds_alternative<Interval>(a)) return true;
  }
  return false;
}

void Program::append(const Program& other) {
  statements.insert(statements.end(), other.statements.begin(), other.statements.end());
}

namespace {

// Renames anonymous variables to `_<k>` by order of first appearance.
class AnonymousCanonicalizer {
 public:
  Term term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Anonymous: {
        auto [it, inserted] = names_.try_emplace(t.name(), "");
        if (inserted) it->second = "_" + std::to_string(names_.size());
        return Term::anonymous(it->second);
      }
      case Term::Kind::Binary:
        return Term::binary(t.op(), term(t.left()), term(t.right()));
      default:
        return t;
    }
  }
  Atom atom(const Atom& a) {
    Atom out{a.predicate, {}};
    for (const auto& t : a.args) out.args.push_back(term(t));
    return out;
  }
  Literal literal(const Literal& l) {
    Literal out = l;
    if (l.kind == Literal::Kind::Comparison) {
      out.comparison.left = term(l.comparison.left);
      out.comparison.right = term(l.comparison.right);
    } else {
      out.atom = atom(l.atom);
    }
    return out;
  }
  std::vector<Literal> literals(const std::vector<Literal>& ls) {
    std::vector<Literal> out;
    for (const auto& l : ls) out.push_back(literal(l));
    return out;
  }
  Statement statement(const Statement& s) {
    names_.clear();
    Statement out = s;
    if (auto* f = std::get_if<Fact>(&out.node)) {
      for (auto& a : f->atom.args) {
        if (auto* t = std::get_if<Term>(&a)) *t = term(*t);
      }
    } else if (auto* r = std::get_if<Rule>(&out.node)) {
      r->head = atom(r->head);
      for (auto& b : r->body) {
        if (auto* l = std::get_if<Literal>(&b)) {
          *l = literal(*l);
        } else {
          auto& agg = std::get<AggregateAssignment>(b);
          agg.target = term(agg.target);
          for (auto& e : agg.elements) {
            for (auto& t : e.tuple) t = term(t);
            e.condition = literals(e.condition);
          }
        }
      }
    } else if (auto* c = std::get_if<ChoiceRule>(&out.node)) {
      for (auto& e : c->elements) {
        e.head = atom(e.head);
        e.condition = literals(e.condition);
      }
      c->body = literals(c->body);
    } else if (auto* k = std::get_if<Constraint>(&out.node)) {
      k->body = literals(k->body);
    }
    return out;
  }

 private:
  std::map<std::string, std::string> names_;
};

}  // namespace

bool equal_modulo_anonymous(const Program& a, const Program& b) {
  if (a.statements.size() != b.statements.size()) return false;
  AnonymousCanonicalizer ca, cb;
  for (std::size_t i = 0; i < a.statements.size(); ++i) {
    if (!(ca.statement(a.statements[i]) == cb.statement(b.statements[i]))) return false;
  }
  return true;
}

}  // namespace uamasp
