#include "uamasp/printer.hpp"

#include <sstream>

namespace uamasp {
namespace {

int precedence(ArithOp op) { return op == ArithOp::Add || op == ArithOp::Sub ? 1 : 2; }

char op_char(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return '+';
    case ArithOp::Sub: return '-';
    case ArithOp::Mul: return '*';
    case ArithOp::Div: return '/';
  }
  return '?';
}

void print_term_into(std::ostream& os, const Term& t, int parent_prec, bool right_operand) {
  switch (t.kind()) {
    case Term::Kind::Integer:
      os << t.value();
      return;
    case Term::Kind::Symbol:
    case Term::Kind::Variable:
    case Term::Kind::Anonymous:
      os << t.name();
      return;
    case Term::Kind::Binary: {
      const int prec = precedence(t.op());
      const bool parens = prec < parent_prec || (prec == parent_prec && right_operand);
      if (parens) os << '(';
      print_term_into(os, t.left(), prec, false);
      os << op_char(t.op());
      print_term_into(os, t.right(), prec, true);
      if (parens) os << ')';
      return;
    }
  }
}

template <class T, class F>
void join(std::ostream& os, const std::vector<T>& items, const char* sep, F&& f) {
  bool first = true;
  for (const auto& item : items) {
    if (!first) os << sep;
    first = false;
    f(item);
  }
}

void print_literals(std::ostream& os, const std::vector<Literal>& ls) {
  join(os, ls, ", ", [&](const Literal& l) { os << print_literal(l); });
}

}  // namespace

const char* cmp_op_text(CmpOp op) {
  switch (op) {
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
    case CmpOp::Eq: return "==";
    case CmpOp::Ne: return "!=";
  }
  return "?";
}

std::string print_term(const Term& t) {
  std::ostringstream os;
  print_term_into(os, t, 0, false);
  return os.str();
}

std::string print_atom(const Atom& a) {
  std::ostringstream os;
  os << a.predicate;
  if (!a.args.empty()) {
    os << '(';
    join(os, a.args, ", ", [&](const Term& t) { os << print_term(t); });
    os << ')';
  }
  return os.str();
}

std::string print_literal(const Literal& l) {
  switch (l.kind) {
    case Literal::Kind::Positive:
      return print_atom(l.atom);
    case Literal::Kind::Negative:
      return "not " + print_atom(l.atom);
    case Literal::Kind::Comparison:
      return print_term(l.comparison.left) + " " + cmp_op_text(l.comparison.op) + " " +
             print_term(l.comparison.right);
  }
  return {};
}

std::string print_statement(const Statement& s) {
  std::ostringstream os;
  if (const auto* f = std::get_if<Fact>(&s.node)) {
    os << f->atom.predicate;
    if (!f->atom.args.empty()) {
      os << '(';
      join(os, f->atom.args, ", ", [&](const FactArg& a) {
        if (const auto* iv = std::get_if<Interval>(&a)) {
          os << iv->lo << ".." << iv->hi;
        } else {
          os << print_term(std::get<Term>(a));
        }
      });
      os << ')';
    }
    os << '.';
  } else if (const auto* r = std::get_if<Rule>(&s.node)) {
    os << print_atom(r->head) << " :- ";
    join(os, r->body, ", ", [&](const BodyElement& b) {
      if (const auto* l = std::get_if<Literal>(&b)) {
        os << print_literal(*l);
        return;
      }
      const auto& agg = std::get<AggregateAssignment>(b);
      os << print_term(agg.target) << " = #count{";
      join(os, agg.elements, "; ", [&](const CountElement& e) {
        join(os, e.tuple, ", ", [&](const Term& t) { os << print_term(t); });
        if (!e.condition.empty()) {
          os << ": ";
          print_literals(os, e.condition);
        }
      });
      os << '}';
    });
    os << '.';
  } else if (const auto* c = std::get_if<ChoiceRule>(&s.node)) {
    os << c->lower << '{';
    join(os, c->elements, "; ", [&](const ChoiceElement& e) {
      os << print_atom(e.head);
      if (!e.condition.empty()) {
        os << ": ";
        print_literals(os, e.condition);
      }
    });
    os << '}' << c->upper;
    if (!c->body.empty()) {
      os << " :- ";
      print_literals(os, c->body);
    }
    os << '.';
  } else if (const auto* k = std::get_if<Constraint>(&s.node)) {
    os << ":- ";
    print_literals(os, k->body);
    os << '.';
  } else {
    const auto& show = std::get<ShowDirective>(s.node);
    os << "#show " << show.predicate << '/' << show.arity << '.';
  }
  return os.str();
}

std::string print_program(const Program& p) {
  std::string out;
  for (const auto& s : p.statements) {
    out += print_statement(s);
    out += '\n';
  }
  return out;
}

}  // namespace uamasp
