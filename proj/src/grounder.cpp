#include "uamasp/grounder.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

#include "uamasp/printer.hpp"

namespace uamasp {

// ---------------------------------------------------------------------------
// Term evaluation
// ---------------------------------------------------------------------------

Value evaluate_term(const Term& t, const Binding& binding) {
  switch (t.kind()) {
    case Term::Kind::Integer:
      return Value::integer(t.value());
    case Term::Kind::Symbol:
      return Value::symbol(t.name());
    case Term::Kind::Variable:
    case Term::Kind::Anonymous: {
      auto it = binding.find(t.name());
      if (it == binding.end()) throw EvalError("unbound variable " + t.name());
      return it->second;
    }
    case Term::Kind::Binary: {
      const Value l = evaluate_term(t.left(), binding);
      const Value r = evaluate_term(t.right(), binding);
      if (!l.is_integer() || !r.is_integer()) throw EvalError("arithmetic over non-integer in " + print_term(t));
      const std::int64_t a = l.as_integer();
      const std::int64_t b = r.as_integer();
      switch (t.op()) {
        case ArithOp::Add: return Value::integer(a + b);
        case ArithOp::Sub: return Value::integer(a - b);
        case ArithOp::Mul: return Value::integer(a * b);
        case ArithOp::Div:
          if (b == 0) throw EvalError("division by zero in " + print_term(t));
          return Value::integer(a / b);
      }
    }
  }
  throw EvalError("bad term");
}

bool compare_values(const Value& left, CmpOp op, const Value& right) {
  switch (op) {
    case CmpOp::Lt: return left < right;
    case CmpOp::Le: return left <= right;
    case CmpOp::Gt: return left > right;
    case CmpOp::Ge: return left >= right;
    case CmpOp::Eq: return left == right;
    case CmpOp::Ne: return left != right;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Safety
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> vars_of(const Term& t) {
  std::vector<std::string> out;
  t.collect_variables(out);
  return out;
}

void add_vars(std::set<std::string>& out, const Term& t) {
  for (auto& v : vars_of(t)) out.insert(v);
}

void add_vars(std::set<std::string>& out, const Atom& a) {
  for (const auto& t : a.args) add_vars(out, t);
}

// Variables a literal list binds: direct variable arguments of positive atoms.
void add_binders(std::set<std::string>& out, const std::vector<Literal>& lits) {
  for (const auto& l : lits) {
    if (l.kind != Literal::Kind::Positive) continue;
    for (const auto& t : l.atom.args) {
      if (t.is_variable()) out.insert(t.name());
    }
  }
}

// Variables of a literal that must be bound. Anonymous variables under
// negation are projected and exempt.
void add_needed(std::set<std::string>& out, const Literal& l) {
  if (l.kind == Literal::Kind::Comparison) {
    add_vars(out, l.comparison.left);
    add_vars(out, l.comparison.right);
    return;
  }
  for (const auto& t : l.atom.args) {
    std::vector<std::string> vs;
    if (l.kind == Literal::Kind::Negative && t.kind() == Term::Kind::Anonymous) continue;
    t.collect_variables(vs);
    for (auto& v : vs) {
      if (l.kind == Literal::Kind::Negative && v.rfind('_', 0) == 0) continue;
      out.insert(v);
    }
  }
}

std::string display_name(const std::string& v) { return v.rfind('_', 0) == 0 ? "_" : v; }

// Checks one element (choice or count) against the globally bound set.
// Variables of the element not occurring outside it are local.
void check_element(const std::set<std::string>& bound, const std::vector<Literal>& condition,
                   const std::set<std::string>& element_needed, std::set<std::string>& unsafe) {
  std::set<std::string> local = bound;
  add_binders(local, condition);
  for (const auto& v : element_needed) {
    if (!local.count(v)) unsafe.insert(v);
  }
}

}  // namespace

SafetyResult check_safety(const Statement& statement) {
  std::set<std::string> unsafe;
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Fact>) {
          for (const auto& a : s.atom.args) {
            if (const auto* t = std::get_if<Term>(&a)) add_vars(unsafe, *t);
          }
        } else if constexpr (std::is_same_v<S, Rule>) {
          std::set<std::string> bound, needed;
          std::vector<Literal> lits;
          for (const auto& b : s.body) {
            if (const auto* l = std::get_if<Literal>(&b)) lits.push_back(*l);
          }
          add_binders(bound, lits);
          for (const auto& b : s.body) {
            if (const auto* agg = std::get_if<AggregateAssignment>(&b)) add_vars(bound, agg->target);
          }
          add_vars(needed, s.head);
          for (const auto& l : lits) add_needed(needed, l);
          for (const auto& v : needed) {
            if (!bound.count(v)) unsafe.insert(v);
          }
          for (const auto& b : s.body) {
            const auto* agg = std::get_if<AggregateAssignment>(&b);
            if (!agg) continue;
            for (const auto& e : agg->elements) {
              std::set<std::string> en;
              for (const auto& t : e.tuple) add_vars(en, t);
              for (const auto& l : e.condition) add_needed(en, l);
              check_element(bound, e.condition, en, unsafe);
            }
          }
        } else if constexpr (std::is_same_v<S, ChoiceRule>) {
          std::set<std::string> bound, needed;
          add_binders(bound, s.body);
          for (const auto& l : s.body) add_needed(needed, l);
          for (const auto& v : needed) {
            if (!bound.count(v)) unsafe.insert(v);
          }
          for (const auto& e : s.elements) {
            std::set<std::string> en;
            add_vars(en, e.head);
            for (const auto& l : e.condition) add_needed(en, l);
            check_element(bound, e.condition, en, unsafe);
          }
        } else if constexpr (std::is_same_v<S, Constraint>) {
          std::set<std::string> bound, needed;
          add_binders(bound, s.body);
          for (const auto& l : s.body) add_needed(needed, l);
          for (const auto& v : needed) {
            if (!bound.count(v)) unsafe.insert(v);
          }
        }
      },
      statement.node);
  SafetyResult r;
  std::set<std::string> shown;
  for (const auto& v : unsafe) shown.insert(display_name(v));
  r.unsafe_variables.assign(shown.begin(), shown.end());
  r.safe = r.unsafe_variables.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Grounding
// ---------------------------------------------------------------------------

namespace {

Signature signature_of(const Atom& a) { return {a.predicate, a.arity()}; }

bool arithmetic_vars_bound(const Atom& a, const Binding& b) {
  for (const auto& t : a.args) {
    if (t.kind() != Term::Kind::Binary) continue;
    for (const auto& v : vars_of(t)) {
      if (!b.count(v)) return false;
    }
  }
  return true;
}

bool all_bound(const Comparison& c, const Binding& b) {
  for (const auto& v : vars_of(c.left)) {
    if (!b.count(v)) return false;
  }
  for (const auto& v : vars_of(c.right)) {
    if (!b.count(v)) return false;
  }
  return true;
}

bool holds(const Comparison& c, const Binding& b) {
  try {
    return compare_values(evaluate_term(c.left, b), c.op, evaluate_term(c.right, b));
  } catch (const EvalError&) {
    return false;
  }
}

std::optional<GroundAtom> instantiate(const Atom& a, const Binding& b) {
  GroundAtom g{a.predicate, {}};
  g.args.reserve(a.args.size());
  try {
    for (const auto& t : a.args) g.args.push_back(evaluate_term(t, b));
  } catch (const EvalError&) {
    return std::nullopt;
  }
  return g;
}

std::string rule_key(const GroundRule& rule) {
  std::ostringstream os;
  auto body = [&](const GroundBody& b) {
    os << '[';
    for (auto p : b.pos) os << p << ' ';
    os << '|';
    for (auto n : b.neg) os << n << ' ';
    os << ']';
  };
  os << rule.index() << ':';
  std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, NormalRule>) {
          os << r.head;
          body(r.body);
        } else if constexpr (std::is_same_v<R, GroundChoiceRule>) {
          os << r.lower << ',' << r.upper;
          for (const auto& e : r.elements) {
            os << e.head;
            body(e.condition);
          }
          os << "<-";
          body(r.body);
        } else if constexpr (std::is_same_v<R, ConstraintRule>) {
          body(r.body);
        } else {
          os << r.head << '=' << r.required;
          for (const auto& e : r.elements) {
            for (const auto& v : e.tuple) os << v.to_string() << ',';
            body(e.condition);
          }
          os << "<-";
          body(r.body);
        }
      },
      rule);
  return os.str();
}

void normalize_body(GroundBody& b) {
  std::sort(b.pos.begin(), b.pos.end());
  b.pos.erase(std::unique(b.pos.begin(), b.pos.end()), b.pos.end());
  std::sort(b.neg.begin(), b.neg.end());
  b.neg.erase(std::unique(b.neg.begin(), b.neg.end()), b.neg.end());
}

struct StatementInfo {
  std::size_t index = 0;
  const Statement* statement = nullptr;
  std::vector<Signature> heads;
  std::vector<Signature> deps;
  std::vector<Signature> aggregate_deps;
};

class Grounder {
 public:
  explicit Grounder(const Program& p) : program_(p) {}

  GroundProgram run() {
    for (const auto& s : program_.statements) {
      const SafetyResult safety = check_safety(s);
      if (!safety.safe) throw SafetyError(print_statement(s), safety.unsafe_variables, s.pos);
    }
    ground_facts();
    collect_statements();
    for (const auto& component : component_order()) ground_component(component);
    for (const auto* info : constraints_) emit_statement(*info);
    simplify();
    for (const auto& s : program_.statements) {
      if (const auto* show = std::get_if<ShowDirective>(&s.node)) {
        const Signature sig{show->predicate, show->arity};
        if (std::find(out_.shows.begin(), out_.shows.end(), sig) == out_.shows.end()) out_.shows.push_back(sig);
      }
    }
    return std::move(out_);
  }

 private:
  // -- domain ----------------------------------------------------------------

  bool add_to_domain(const GroundAtom& a) {
    const std::size_t before = out_.atoms.size();
    const AtomId id = out_.atoms.intern(a);
    if (out_.atoms.size() == before) return false;
    domain_[Signature{a.predicate, a.args.size()}].push_back(id);
    return true;
  }

  std::vector<AtomId>& domain_of(const Signature& sig) { return domain_[sig]; }

  // -- facts -----------------------------------------------------------------

  void ground_facts() {
    for (const auto& s : program_.statements) {
      const auto* f = std::get_if<Fact>(&s.node);
      if (!f) continue;
      std::vector<std::vector<Value>> choices;
      for (const auto& a : f->atom.args) {
        std::vector<Value> vals;
        if (const auto* iv = std::get_if<Interval>(&a)) {
          if (iv->lo > iv->hi) {
            throw GroundingError("interval " + std::to_string(iv->lo) + ".." + std::to_string(iv->hi) +
                                 " has lo > hi in " + print_statement(s));
          }
          for (std::int64_t v = iv->lo; v <= iv->hi; ++v) vals.push_back(Value::integer(v));
        } else {
          try {
            vals.push_back(evaluate_term(std::get<Term>(a), {}));
          } catch (const EvalError&) {
            // Undefined arithmetic: the fact has no instance.
          }
        }
        choices.push_back(std::move(vals));
      }
      // Cartesian expansion, leftmost position varying slowest.
      std::vector<Value> current;
      std::function<void(std::size_t)> expand = [&](std::size_t k) {
        if (k == choices.size()) {
          GroundAtom atom{f->atom.predicate, current};
          add_to_domain(atom);
          emit(NormalRule{*out_.atoms.find(atom), {}});
          return;
        }
        for (const auto& v : choices[k]) {
          current.push_back(v);
          expand(k + 1);
          current.pop_back();
        }
      };
      expand(0);
    }
  }

  // -- dependency analysis -----------------------------------------------------

  void collect_statements() {
    infos_.reserve(program_.statements.size());
    for (std::size_t i = 0; i < program_.statements.size(); ++i) {
      const Statement& s = program_.statements[i];
      StatementInfo info;
      info.index = i;
      info.statement = &s;
      auto deps_of = [&](const std::vector<Literal>& ls, std::vector<Signature>& into) {
        for (const auto& l : ls) {
          if (l.kind != Literal::Kind::Comparison) into.push_back(signature_of(l.atom));
        }
      };
      if (const auto* r = std::get_if<Rule>(&s.node)) {
        info.heads.push_back(signature_of(r->head));
        for (const auto& b : r->body) {
          if (const auto* l = std::get_if<Literal>(&b)) {
            deps_of({*l}, info.deps);
          } else {
            for (const auto& e : std::get<AggregateAssignment>(b).elements) {
              deps_of(e.condition, info.deps);
              deps_of(e.condition, info.aggregate_deps);
            }
          }
        }
      } else if (const auto* c = std::get_if<ChoiceRule>(&s.node)) {
        for (const auto& e : c->elements) {
          info.heads.push_back(signature_of(e.head));
          deps_of(e.condition, info.deps);
        }
        deps_of(c->body, info.deps);
      } else if (const auto* k = std::get_if<Constraint>(&s.node)) {
        deps_of(k->body, info.deps);
      } else {
        continue;
      }
      infos_.push_back(std::move(info));
    }
    for (const auto& info : infos_) {
      if (info.heads.empty()) constraints_.push_back(&info);
    }
  }

  // Strongly connected components of the predicate dependency graph, in a
  // topological order; ties go to the component defined first in the source.
  std::vector<std::vector<const StatementInfo*>> component_order() {
    std::map<Signature, std::size_t> node;
    std::vector<Signature> sigs;
    for (const auto& info : infos_) {
      for (const auto& h : info.heads) {
        if (node.try_emplace(h, sigs.size()).second) sigs.push_back(h);
      }
    }
    const std::size_t n = sigs.size();
    std::vector<std::set<std::size_t>> succ(n);
    for (const auto& info : infos_) {
      // Heads of one choice rule are grounded together.
      for (std::size_t i = 1; i < info.heads.size(); ++i) {
        succ[node[info.heads[i - 1]]].insert(node[info.heads[i]]);
        succ[node[info.heads[i]]].insert(node[info.heads[i - 1]]);
      }
      for (const auto& h : info.heads) {
        for (const auto& d : info.deps) {
          auto it = node.find(d);
          if (it != node.end()) succ[it->second].insert(node[h]);
        }
      }
    }

    // Tarjan
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<std::size_t> stack;
    int counter = 0, ncomp = 0;
    std::function<void(std::size_t)> strongconnect = [&](std::size_t v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = 1;
      for (auto w : succ[v]) {
        if (index[w] < 0) {
          strongconnect(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = ncomp;
        } while (w != v);
        ++ncomp;
      }
    };
    for (std::size_t v = 0; v < n; ++v) {
      if (index[v] < 0) strongconnect(v);
    }

    std::vector<std::vector<const StatementInfo*>> members(ncomp);
    std::vector<std::size_t> first(ncomp, SIZE_MAX);
    for (const auto& info : infos_) {
      if (info.heads.empty()) continue;
      const int c = comp[node[info.heads.front()]];
      members[c].push_back(&info);
      first[c] = std::min(first[c], info.index);
      for (const auto& d : info.aggregate_deps) {
        auto it = node.find(d);
        if (it != node.end() && comp[it->second] == c) {
          throw GroundingError("recursion through #count is not supported: " + print_statement(*info.statement));
        }
      }
    }

    std::vector<std::set<int>> csucc(ncomp);
    std::vector<int> indeg(ncomp, 0);
    for (std::size_t v = 0; v < n; ++v) {
      for (auto w : succ[v]) {
        if (comp[v] != comp[w] && csucc[comp[v]].insert(comp[w]).second) ++indeg[comp[w]];
      }
    }
    using Entry = std::pair<std::size_t, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (int c = 0; c < ncomp; ++c) {
      if (indeg[c] == 0) ready.push({first[c], c});
    }
    std::vector<std::vector<const StatementInfo*>> order;
    while (!ready.empty()) {
      const int c = ready.top().second;
      ready.pop();
      if (!members[c].empty()) order.push_back(members[c]);
      for (int d : csucc[c]) {
        if (--indeg[d] == 0) ready.push({first[d], d});
      }
    }
    return order;
  }

  // -- joins -------------------------------------------------------------------

  using Callback = std::function<void(Binding&)>;

  // Enumerates bindings satisfying the positive atoms and comparisons of
  // `lits` against the current domain. Negative literals are ignored.
  void join(const std::vector<const Literal*>& lits, Binding& b, const Callback& cb) {
    std::vector<char> done(lits.size(), 0);
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (lits[i]->kind == Literal::Kind::Negative) done[i] = 1;
    }
    join_rec(lits, done, b, cb);
  }

  void join_rec(const std::vector<const Literal*>& lits, std::vector<char>& done, Binding& b, const Callback& cb) {
    std::vector<std::size_t> marked;
    auto unmark = [&] {
      for (auto i : marked) done[i] = 0;
    };
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (done[i] || lits[i]->kind != Literal::Kind::Comparison) continue;
      if (!all_bound(lits[i]->comparison, b)) continue;
      if (!holds(lits[i]->comparison, b)) {
        unmark();
        return;
      }
      done[i] = 1;
      marked.push_back(i);
    }
    std::size_t pick = lits.size();
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (!done[i] && lits[i]->kind == Literal::Kind::Positive && arithmetic_vars_bound(lits[i]->atom, b)) {
        pick = i;
        break;
      }
    }
    if (pick == lits.size()) {
      for (std::size_t i = 0; i < lits.size(); ++i) {
        if (!done[i] && lits[i]->kind == Literal::Kind::Positive) {
          throw GroundingError("cannot bind arithmetic arguments of " + print_literal(*lits[i]));
        }
      }
      cb(b);
      unmark();
      return;
    }
    done[pick] = 1;
    const Atom& pattern = lits[pick]->atom;
    std::vector<AtomId>& dom = domain_of(signature_of(pattern));
    for (std::size_t k = 0; k < dom.size(); ++k) {
      const GroundAtom& candidate = out_.atoms.atom(dom[k]);
      std::vector<std::string> bound_here;
      bool ok = true;
      for (std::size_t a = 0; a < pattern.args.size() && ok; ++a) {
        const Term& t = pattern.args[a];
        if (t.is_variable()) {
          auto it = b.find(t.name());
          if (it == b.end()) {
            b.emplace(t.name(), candidate.args[a]);
            bound_here.push_back(t.name());
          } else {
            ok = it->second == candidate.args[a];
          }
        } else {
          try {
            ok = evaluate_term(t, b) == candidate.args[a];
          } catch (const EvalError&) {
            ok = false;
          }
        }
      }
      if (ok) join_rec(lits, done, b, cb);
      for (const auto& v : bound_here) b.erase(v);
    }
    done[pick] = 0;
    unmark();
  }

  // Ground body ids for a fully bound literal list. Negative literals whose
  // atom is outside the (final) domain are dropped as satisfied; anonymous
  // variables under negation expand to every matching domain atom.
  GroundBody ground_body(const std::vector<const Literal*>& lits, const Binding& b) {
    GroundBody body;
    for (const auto* l : lits) {
      if (l->kind == Literal::Kind::Positive) {
        auto g = instantiate(l->atom, b);
        body.pos.push_back(*out_.atoms.find(*g));
      } else if (l->kind == Literal::Kind::Negative) {
        bool projected = false;
        for (const auto& t : l->atom.args) {
          for (const auto& v : vars_of(t)) {
            if (!b.count(v)) projected = true;
          }
        }
        if (!projected) {
          auto g = instantiate(l->atom, b);
          if (!g) continue;
          if (auto id = out_.atoms.find(*g)) body.neg.push_back(*id);
          continue;
        }
        Binding local = b;
        std::vector<const Literal*> pattern_lit;
        Literal as_positive = Literal::positive(l->atom);
        pattern_lit.push_back(&as_positive);
        join(pattern_lit, local, [&](Binding& m) {
          auto g = instantiate(l->atom, m);
          if (g) body.neg.push_back(*out_.atoms.find(*g));
        });
      }
    }
    normalize_body(body);
    return body;
  }

  // -- per statement -----------------------------------------------------------

  struct Parts {
    std::vector<const Literal*> joinable;
    std::vector<const Literal*> deferred;  // comparisons over the aggregate target
    const AggregateAssignment* aggregate = nullptr;
  };

  Parts split_rule(const Rule& r) {
    Parts p;
    std::set<std::string> targets;
    for (const auto& b : r.body) {
      if (const auto* agg = std::get_if<AggregateAssignment>(&b)) {
        if (p.aggregate) throw GroundingError("at most one #count per rule is supported");
        p.aggregate = agg;
        add_vars(targets, agg->target);
      }
    }
    for (const auto& b : r.body) {
      const auto* l = std::get_if<Literal>(&b);
      if (!l) continue;
      bool uses_target = false;
      if (l->kind != Literal::Kind::Positive) {
        std::set<std::string> vs;
        add_needed(vs, *l);
        for (const auto& v : vs) uses_target |= targets.count(v) > 0;
      }
      (uses_target ? p.deferred : p.joinable).push_back(l);
    }
    return p;
  }

  static std::vector<const Literal*> pointers(const std::vector<Literal>& ls) {
    std::vector<const Literal*> out;
    for (const auto& l : ls) out.push_back(&l);
    return out;
  }

  std::vector<GroundCountElement> ground_elements(const AggregateAssignment& agg, const Binding& b, bool with_ids) {
    std::vector<GroundCountElement> out;
    std::set<std::string> seen;
    for (const auto& e : agg.elements) {
      const auto lits = pointers(e.condition);
      Binding local = b;
      join(lits, local, [&](Binding& m) {
        GroundCountElement ge;
        try {
          for (const auto& t : e.tuple) ge.tuple.push_back(evaluate_term(t, m));
        } catch (const EvalError&) {
          return;
        }
        if (with_ids) ge.condition = ground_body(lits, m);
        std::string key;
        for (const auto& v : ge.tuple) key += v.to_string() + ",";
        key += rule_key(ConstraintRule{ge.condition});
        if (seen.insert(key).second) out.push_back(std::move(ge));
      });
    }
    return out;
  }

  static std::size_t distinct_tuples(const std::vector<GroundCountElement>& es) {
    std::set<std::vector<Value>> keys;
    for (const auto& e : es) keys.insert(e.tuple);
    return keys.size();
  }

  // Calls cb for every admissible aggregate value, with the target bound.
  void for_each_count(const Parts& parts, Binding& b, const std::vector<GroundCountElement>& elements,
                      const std::function<void(Binding&, std::int64_t)>& cb) {
    const auto upper = static_cast<std::int64_t>(distinct_tuples(elements));
    const Term& target = parts.aggregate->target;
    for (std::int64_t n = 0; n <= upper; ++n) {
      const bool fresh = !b.count(target.name());
      if (!fresh && b.at(target.name()) != Value::integer(n)) continue;
      if (fresh) b.emplace(target.name(), Value::integer(n));
      bool ok = true;
      for (const auto* l : parts.deferred) {
        if (l->kind == Literal::Kind::Comparison) ok = ok && holds(l->comparison, b);
      }
      if (ok) cb(b, n);
      if (fresh) b.erase(target.name());
    }
  }

  // Phase 1: heads reachable under the current domain, ignoring negation.
  bool derive_heads(const StatementInfo& info) {
    bool grew = false;
    const Statement& s = *info.statement;
    if (const auto* r = std::get_if<Rule>(&s.node)) {
      const Parts parts = split_rule(*r);
      Binding b;
      join(parts.joinable, b, [&](Binding& m) {
        if (!parts.aggregate) {
          if (auto h = instantiate(r->head, m)) grew |= add_to_domain(*h);
          return;
        }
        const auto elements = ground_elements(*parts.aggregate, m, false);
        for_each_count(parts, m, elements, [&](Binding& mm, std::int64_t) {
          if (auto h = instantiate(r->head, mm)) grew |= add_to_domain(*h);
        });
      });
    } else if (const auto* c = std::get_if<ChoiceRule>(&s.node)) {
      Binding b;
      join(pointers(c->body), b, [&](Binding& m) {
        for (const auto& e : c->elements) {
          Binding local = m;
          join(pointers(e.condition), local, [&](Binding& mm) {
            if (auto h = instantiate(e.head, mm)) grew |= add_to_domain(*h);
          });
        }
      });
    }
    return grew;
  }

  // Phase 2: emit ground rules against the final domain.
  void emit_statement(const StatementInfo& info) {
    const Statement& s = *info.statement;
    if (const auto* r = std::get_if<Rule>(&s.node)) {
      const Parts parts = split_rule(*r);
      Binding b;
      join(parts.joinable, b, [&](Binding& m) {
        if (!parts.aggregate) {
          auto h = instantiate(r->head, m);
          if (!h) return;
          emit(NormalRule{*out_.atoms.find(*h), ground_body(parts.joinable, m)});
          return;
        }
        const auto elements = ground_elements(*parts.aggregate, m, true);
        for_each_count(parts, m, elements, [&](Binding& mm, std::int64_t n) {
          auto h = instantiate(r->head, mm);
          if (!h) return;
          GroundBody body = ground_body(parts.joinable, mm);
          const GroundBody extra = ground_body(parts.deferred, mm);
          body.neg.insert(body.neg.end(), extra.neg.begin(), extra.neg.end());
          normalize_body(body);
          emit(AggregateRule{*out_.atoms.find(*h), elements, n, std::move(body)});
        });
      });
    } else if (const auto* c = std::get_if<ChoiceRule>(&s.node)) {
      const auto body_lits = pointers(c->body);
      Binding b;
      join(body_lits, b, [&](Binding& m) {
        GroundChoiceRule g;
        g.lower = c->lower;
        g.upper = c->upper;
        g.body = ground_body(body_lits, m);
        std::set<std::string> seen;
        for (const auto& e : c->elements) {
          const auto cond = pointers(e.condition);
          Binding local = m;
          join(cond, local, [&](Binding& mm) {
            auto h = instantiate(e.head, mm);
            if (!h) return;
            GroundChoiceElement ge{*out_.atoms.find(*h), ground_body(cond, mm)};
            const std::string key = std::to_string(ge.head) + rule_key(ConstraintRule{ge.condition});
            if (seen.insert(key).second) g.elements.push_back(std::move(ge));
          });
        }
        emit(std::move(g));
      });
    } else if (const auto* k = std::get_if<Constraint>(&s.node)) {
      const auto lits = pointers(k->body);
      Binding b;
      join(lits, b, [&](Binding& m) { emit(ConstraintRule{ground_body(lits, m)}); });
    }
  }

  void ground_component(const std::vector<const StatementInfo*>& members) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto* info : members) grew |= derive_heads(*info);
    }
    for (const auto* info : members) emit_statement(*info);
  }

  void emit(GroundRule r) {
    if (emitted_.insert(rule_key(r)).second) out_.rules.push_back(std::move(r));
  }

  // -- simplification ------------------------------------------------------------

  // Removes literals decided by facts or by atoms without any remaining rule,
  // until nothing changes. Facts end up as bodiless normal rules.
  void simplify() {
    const std::size_t n = out_.atoms.size();
    std::vector<char> fact(n, 0), alive(out_.rules.size(), 1);
    bool changed = true;

    // Returns false if the body can never hold.
    auto reduce = [&](GroundBody& b, const std::vector<char>& possible) {
      for (AtomId p : b.pos) {
        if (!possible[p]) return false;
      }
      for (AtomId q : b.neg) {
        if (fact[q]) return false;
      }
      const std::size_t before = b.pos.size() + b.neg.size();
      std::erase_if(b.pos, [&](AtomId p) { return fact[p] != 0; });
      std::erase_if(b.neg, [&](AtomId q) { return !possible[q]; });
      if (b.pos.size() + b.neg.size() != before) changed = true;
      return true;
    };

    while (changed) {
      changed = false;
      std::vector<char> possible(n, 0);
      for (std::size_t i = 0; i < out_.rules.size(); ++i) {
        if (!alive[i]) continue;
        std::visit(
            [&](const auto& r) {
              using R = std::decay_t<decltype(r)>;
              if constexpr (std::is_same_v<R, NormalRule> || std::is_same_v<R, AggregateRule>) {
                possible[r.head] = 1;
              } else if constexpr (std::is_same_v<R, GroundChoiceRule>) {
                for (const auto& e : r.elements) possible[e.head] = 1;
              }
            },
            out_.rules[i]);
      }
      for (std::size_t i = 0; i < out_.rules.size(); ++i) {
        if (!alive[i]) continue;
        GroundRule& rule = out_.rules[i];
        bool keep = true;
        if (auto* r = std::get_if<NormalRule>(&rule)) {
          keep = reduce(r->body, possible);
          if (keep && r->body.empty() && !fact[r->head]) {
            fact[r->head] = 1;
            changed = true;
          }
        } else if (auto* c = std::get_if<GroundChoiceRule>(&rule)) {
          keep = reduce(c->body, possible);
          if (keep) {
            const std::size_t before = c->elements.size();
            std::erase_if(c->elements, [&](GroundChoiceElement& e) { return !reduce(e.condition, possible); });
            if (c->elements.size() != before) changed = true;
          }
        } else if (auto* k = std::get_if<ConstraintRule>(&rule)) {
          keep = reduce(k->body, possible);
        } else if (auto* a = std::get_if<AggregateRule>(&rule)) {
          keep = reduce(a->body, possible);
          if (keep) {
            const std::size_t before = a->elements.size();
            std::erase_if(a->elements, [&](GroundCountElement& e) { return !reduce(e.condition, possible); });
            if (a->elements.size() != before) changed = true;
            const bool decided = std::all_of(a->elements.begin(), a->elements.end(),
                                             [](const GroundCountElement& e) { return e.condition.empty(); });
            if (decided) {
              const auto count = static_cast<std::int64_t>(distinct_tuples(a->elements));
              if (count == a->required) {
                rule = NormalRule{a->head, a->body};
              } else {
                keep = false;
              }
              changed = true;
            }
          }
        }
        if (!keep) {
          alive[i] = 0;
          changed = true;
        }
      }
    }

    // One bodiless rule per fact; other rules for a fact head are redundant.
    std::vector<GroundRule> rules;
    std::vector<char> fact_emitted(n, 0);
    emitted_.clear();
    for (std::size_t i = 0; i < out_.rules.size(); ++i) {
      if (!alive[i]) continue;
      GroundRule& rule = out_.rules[i];
      if (auto* r = std::get_if<NormalRule>(&rule)) {
        if (fact[r->head]) {
          if (fact_emitted[r->head]) continue;
          fact_emitted[r->head] = 1;
          r->body = {};
        }
      } else if (auto* a = std::get_if<AggregateRule>(&rule)) {
        if (fact[a->head]) continue;
      }
      if (emitted_.insert(rule_key(rule)).second) rules.push_back(std::move(rule));
    }
    out_.rules = std::move(rules);
  }

  const Program& program_;
  GroundProgram out_;
  std::map<Signature, std::vector<AtomId>> domain_;
  std::vector<StatementInfo> infos_;
  std::vector<const StatementInfo*> constraints_;
  std::unordered_set<std::string> emitted_;
};

}  // namespace

GroundProgram ground(const Program& program) { return Grounder(program).run(); }

}  // namespace uamasp
