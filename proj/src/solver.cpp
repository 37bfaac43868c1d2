#include "uamasp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <map>

#include "uamasp/error.hpp"
#include "uamasp/stable.hpp"

namespace uamasp {

const char* status_text(SolveStatus s) {
  return s == SolveStatus::Satisfiable ? "SATISFIABLE" : "UNSATISFIABLE";
}

bool AnswerSet::contains(const GroundProgram& g, const std::string& atom_text) const {
  auto id = g.atoms.find(atom_text);
  return id && std::binary_search(atoms.begin(), atoms.end(), *id);
}

AnswerSet make_answer_set(const GroundProgram& g, std::vector<AtomId> atoms) {
  AnswerSet m;
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  for (AtomId a : atoms) {
    if (g.is_shown(a)) m.projected.push_back(g.atoms.atom(a));
  }
  std::sort(m.projected.begin(), m.projected.end());
  m.atoms = std::move(atoms);
  return m;
}

namespace {

enum : std::uint8_t { kUnassigned = 0, kTrue = 1, kFalse = 2 };
enum class Tri { True, False, Unknown };

struct Lit {
  AtomId atom = 0;
  bool positive = true;
};

struct BodyState {
  Tri value = Tri::True;
  std::size_t unknown = 0;
  Lit last{};
};

struct Element {
  AtomId head = 0;  // choice elements
  std::size_t key = 0;  // count elements
  GroundBody condition;
};

struct Item {
  enum class Kind { Normal, Constraint, Choice, Aggregate } kind = Kind::Normal;
  AtomId head = 0;
  GroundBody body;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::int64_t required = 0;
  std::size_t keys = 0;
  std::vector<Element> elements;
};

class Search {
 public:
  Search(const GroundProgram& g, const SolveOptions& options) : g_(g), options_(options) {
    n_ = g.atom_count();
    val_.assign(n_, kUnassigned);
    occ_.resize(n_);
    supports_.resize(n_);
    for (const auto& rule : g.rules) add_item(rule);
    for (auto& o : occ_) {
      std::sort(o.begin(), o.end());
      o.erase(std::unique(o.begin(), o.end()), o.end());
    }
  }

  SolveResult run() {
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    const std::clock_t cpu_start = std::clock();
    auto since = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };
    double last_model_at = 0.0;

    SolveResult result;
    bool conflict = !initial_propagation();
    while (true) {
      if (conflict) {
        ++result.stats.conflicts;
        if (!backtrack(conflict)) {
          result.exhausted = true;
          break;
        }
        continue;
      }
      const auto next = pick();
      if (!next) {
        std::vector<AtomId> atoms;
        for (AtomId a = 0; a < n_; ++a) {
          if (val_[a] == kTrue) atoms.push_back(a);
        }
        if (is_stable(g_, atoms)) {
          result.models.push_back(make_answer_set(g_, std::move(atoms)));
          last_model_at = since();
          if (result.models.size() == 1) result.stats.first_model_seconds = last_model_at;
          if (options_.max_models != 0 && result.models.size() >= options_.max_models) {
            result.exhausted = std::none_of(levels_.begin(), levels_.end(), [](const Level& l) { return !l.flipped; });
            break;
          }
        }
        conflict = true;
        continue;
      }
      if (options_.decision_budget && result.stats.decisions >= *options_.decision_budget) {
        throw ResourceLimitError("decision budget of " + std::to_string(*options_.decision_budget) + " exceeded");
      }
      ++result.stats.decisions;
      levels_.push_back({trail_.size(), *next, true, false});
      conflict = !(assign(*next, true) && propagate());
    }

    result.stats.models = result.models.size();
    result.stats.wall_seconds = since();
    result.stats.unsat_seconds = result.exhausted ? result.stats.wall_seconds - last_model_at : 0.0;
    result.stats.cpu_seconds = static_cast<double>(std::clock() - cpu_start) / CLOCKS_PER_SEC;
    result.status = result.models.empty() ? SolveStatus::Unsatisfiable : SolveStatus::Satisfiable;
    return result;
  }

 private:
  struct Level {
    std::size_t trail_size;
    AtomId atom;
    bool value;
    bool flipped;
  };

  struct Support {
    std::size_t item;
    std::size_t element;  // index into Item::elements for choices
  };

  // -- construction ------------------------------------------------------------

  void note(std::size_t item, const GroundBody& b) {
    for (AtomId p : b.pos) occ_[p].push_back(item);
    for (AtomId q : b.neg) occ_[q].push_back(item);
  }

  void add_item(const GroundRule& rule) {
    const std::size_t idx = items_.size();
    Item it;
    if (const auto* r = std::get_if<NormalRule>(&rule)) {
      it.kind = Item::Kind::Normal;
      it.head = r->head;
      it.body = r->body;
      occ_[r->head].push_back(idx);
      supports_[r->head].push_back({idx, 0});
    } else if (const auto* k = std::get_if<ConstraintRule>(&rule)) {
      it.kind = Item::Kind::Constraint;
      it.body = k->body;
    } else if (const auto* c = std::get_if<GroundChoiceRule>(&rule)) {
      it.kind = Item::Kind::Choice;
      it.body = c->body;
      it.lower = c->lower;
      it.upper = c->upper;
      for (std::size_t e = 0; e < c->elements.size(); ++e) {
        it.elements.push_back({c->elements[e].head, 0, c->elements[e].condition});
        occ_[c->elements[e].head].push_back(idx);
        supports_[c->elements[e].head].push_back({idx, e});
        note(idx, c->elements[e].condition);
      }
    } else {
      const auto& a = std::get<AggregateRule>(rule);
      it.kind = Item::Kind::Aggregate;
      it.head = a.head;
      it.body = a.body;
      it.required = a.required;
      std::map<std::vector<Value>, std::size_t> keys;
      for (const auto& e : a.elements) {
        auto [pos, inserted] = keys.try_emplace(e.tuple, keys.size());
        it.elements.push_back({0, pos->second, e.condition});
        note(idx, e.condition);
      }
      it.keys = keys.size();
      occ_[a.head].push_back(idx);
      supports_[a.head].push_back({idx, 0});
    }
    note(idx, it.body);
    items_.push_back(std::move(it));
  }

  // -- evaluation ----------------------------------------------------------------

  BodyState state(const GroundBody& b) const {
    BodyState s;
    for (AtomId p : b.pos) {
      if (val_[p] == kFalse) return {Tri::False, 0, {}};
      if (val_[p] == kUnassigned) {
        ++s.unknown;
        s.last = {p, true};
      }
    }
    for (AtomId q : b.neg) {
      if (val_[q] == kTrue) return {Tri::False, 0, {}};
      if (val_[q] == kUnassigned) {
        ++s.unknown;
        s.last = {q, false};
      }
    }
    s.value = s.unknown ? Tri::Unknown : Tri::True;
    return s;
  }

  Tri aggregate_state(const Item& it) const {
    std::vector<std::uint8_t> key(it.keys, 0);  // 0 none, 1 possible, 2 certain
    for (const auto& e : it.elements) {
      const Tri c = state(e.condition).value;
      if (c == Tri::True) {
        key[e.key] = 2;
      } else if (c == Tri::Unknown && key[e.key] == 0) {
        key[e.key] = 1;
      }
    }
    std::int64_t lo = 0, hi = 0;
    for (auto k : key) {
      lo += k == 2;
      hi += k != 0;
    }
    if (it.required < lo || it.required > hi) return Tri::False;
    if (lo == hi) return Tri::True;
    return Tri::Unknown;
  }

  // -- assignment ----------------------------------------------------------------

  bool assign(AtomId a, bool value) {
    const std::uint8_t v = value ? kTrue : kFalse;
    if (val_[a] == v) return true;
    if (val_[a] != kUnassigned) return false;
    val_[a] = v;
    trail_.push_back(a);
    return true;
  }

  bool assign(Lit l, bool satisfied) { return assign(l.atom, l.positive == satisfied); }

  bool make_true(const GroundBody& b) {
    for (AtomId p : b.pos) {
      if (!assign(p, true)) return false;
    }
    for (AtomId q : b.neg) {
      if (!assign(q, false)) return false;
    }
    return true;
  }

  // -- propagation -------------------------------------------------------------

  bool propagate_item(std::size_t idx) {
    const Item& it = items_[idx];
    const BodyState b = state(it.body);
    switch (it.kind) {
      case Item::Kind::Normal:
        if (b.value == Tri::True) return assign(it.head, true);
        if (val_[it.head] == kFalse && b.value == Tri::Unknown && b.unknown == 1) return assign(b.last, false);
        return true;
      case Item::Kind::Constraint:
        if (b.value == Tri::True) return false;
        if (b.value == Tri::Unknown && b.unknown == 1) return assign(b.last, false);
        return true;
      case Item::Kind::Choice: {
        if (b.value == Tri::False) return true;
        std::int64_t t = 0, p = 0;
        for (const auto& e : it.elements) {
          const Tri c = state(e.condition).value;
          if (c == Tri::True && val_[e.head] == kTrue) ++t;
          if (c != Tri::False && val_[e.head] != kFalse) ++p;
        }
        const bool violated = t > it.upper || p < it.lower;
        if (b.value == Tri::Unknown) {
          if (violated && b.unknown == 1) return assign(b.last, false);
          return true;
        }
        if (violated) return false;
        if (t == it.upper || p == it.lower) {
          const bool to = p == it.lower && t != it.upper;
          for (const auto& e : it.elements) {
            if (val_[e.head] != kUnassigned || state(e.condition).value != Tri::True) continue;
            if (!assign(e.head, to)) return false;
          }
        }
        return true;
      }
      case Item::Kind::Aggregate: {
        if (b.value == Tri::False) return true;
        const Tri agg = aggregate_state(it);
        if (agg == Tri::False) return true;
        if (b.value == Tri::True && agg == Tri::True) return assign(it.head, true);
        if (val_[it.head] == kFalse && agg == Tri::True && b.value == Tri::Unknown && b.unknown == 1) {
          return assign(b.last, false);
        }
        return true;
      }
    }
    return true;
  }

  // An atom needs a rule whose body can still hold; with a single candidate
  // left, a true atom forces that body.
  bool check_support(AtomId a) {
    if (val_[a] == kFalse) return true;
    std::size_t possible = 0;
    const Support* only = nullptr;
    for (const auto& s : supports_[a]) {
      const Item& it = items_[s.item];
      bool ok = state(it.body).value != Tri::False;
      if (ok && it.kind == Item::Kind::Choice) ok = state(it.elements[s.element].condition).value != Tri::False;
      if (ok && it.kind == Item::Kind::Aggregate) ok = aggregate_state(it) != Tri::False;
      if (ok) {
        ++possible;
        only = &s;
        if (possible > 1) break;
      }
    }
    if (possible == 0) return assign(a, false);
    if (possible == 1 && val_[a] == kTrue) {
      const Item& it = items_[only->item];
      if (!make_true(it.body)) return false;
      if (it.kind == Item::Kind::Choice) return make_true(it.elements[only->element].condition);
    }
    return true;
  }

  bool visit(AtomId x) {
    if (!check_support(x)) return false;
    for (std::size_t idx : occ_[x]) {
      if (!propagate_item(idx)) return false;
      const Item& it = items_[idx];
      if (it.kind == Item::Kind::Normal || it.kind == Item::Kind::Aggregate) {
        if (!check_support(it.head)) return false;
      } else if (it.kind == Item::Kind::Choice) {
        for (const auto& e : it.elements) {
          if (!check_support(e.head)) return false;
        }
      }
    }
    return true;
  }

  bool propagate() {
    while (qhead_ < trail_.size()) {
      if (!visit(trail_[qhead_++])) return false;
    }
    return true;
  }

  bool initial_propagation() {
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (!propagate_item(i)) return false;
    }
    for (AtomId a = 0; a < n_; ++a) {
      if (!check_support(a)) return false;
    }
    return propagate();
  }

  // -- search ------------------------------------------------------------------

  std::optional<AtomId> pick() const {
    for (AtomId a = 0; a < n_; ++a) {
      if (val_[a] == kUnassigned) return a;
    }
    return std::nullopt;
  }

  void undo_to(std::size_t size) {
    while (trail_.size() > size) {
      val_[trail_.back()] = kUnassigned;
      trail_.pop_back();
    }
    qhead_ = std::min(qhead_, size);
  }

  // Flips the most recent unflipped decision. Returns false when none is left.
  bool backtrack(bool& conflict) {
    while (!levels_.empty() && levels_.back().flipped) {
      undo_to(levels_.back().trail_size);
      levels_.pop_back();
    }
    if (levels_.empty()) return false;
    Level& l = levels_.back();
    undo_to(l.trail_size);
    l.value = !l.value;
    l.flipped = true;
    conflict = !(assign(l.atom, l.value) && propagate());
    return true;
  }

  const GroundProgram& g_;
  SolveOptions options_;
  std::size_t n_ = 0;
  std::vector<Item> items_;
  std::vector<std::vector<std::size_t>> occ_;
  std::vector<std::vector<Support>> supports_;
  std::vector<std::uint8_t> val_;
  std::vector<AtomId> trail_;
  std::size_t qhead_ = 0;
  std::vector<Level> levels_;
};

}  // namespace

SolveResult solve(const GroundProgram& g, const SolveOptions& options) { return Search(g, options).run(); }

}  // namespace uamasp
