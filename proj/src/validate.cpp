#include "uamasp/validate.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "uamasp/grounder.hpp"

namespace uamasp {

namespace {

struct Derivation {
  AtomId head;
  std::vector<AtomId> body;
};

class Checker {
 public:
  Checker(const GroundProgram& g, const std::vector<AtomId>& model) : g_(g), in_(g.atom_count(), 0) {
    for (AtomId a : model) in_[a] = 1;
  }

  bool holds(const GroundBody& b) const {
    return std::all_of(b.pos.begin(), b.pos.end(), [&](AtomId a) { return in_[a]; }) &&
           std::none_of(b.neg.begin(), b.neg.end(), [&](AtomId a) { return in_[a]; });
  }
  bool neg_clear(const GroundBody& b) const {
    return std::none_of(b.neg.begin(), b.neg.end(), [&](AtomId a) { return in_[a]; });
  }

  std::int64_t count(const std::vector<GroundCountElement>& elements) const {
    std::set<std::vector<Value>> seen;
    for (const auto& e : elements) {
      if (holds(e.condition)) seen.insert(e.tuple);
    }
    return static_cast<std::int64_t>(seen.size());
  }

  std::string first_violation() const {
    for (const auto& rule : g_.rules) {
      bool ok = std::visit(
          [&](const auto& r) -> bool {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, NormalRule>) {
              return !holds(r.body) || in_[r.head];
            } else if constexpr (std::is_same_v<R, GroundChoiceRule>) {
              if (!holds(r.body)) return true;
              std::int64_t n = 0;
              for (const auto& e : r.elements) n += in_[e.head] && holds(e.condition);
              return r.lower <= n && n <= r.upper;
            } else if constexpr (std::is_same_v<R, ConstraintRule>) {
              return !holds(r.body);
            } else {
              return !holds(r.body) || count(r.elements) != r.required || in_[r.head];
            }
          },
          rule);
      if (!ok) return format_ground_rule(g_, rule);
    }
    return {};
  }

  // Reduct relative to the model: negation is evaluated against the model,
  // choice heads outside the model and failed counts contribute nothing.
  std::vector<Derivation> reduct() const {
    std::vector<Derivation> out;
    for (const auto& rule : g_.rules) {
      if (const auto* r = std::get_if<NormalRule>(&rule)) {
        if (neg_clear(r->body)) out.push_back({r->head, r->body.pos});
      } else if (const auto* r = std::get_if<GroundChoiceRule>(&rule)) {
        if (!neg_clear(r->body)) continue;
        for (const auto& e : r->elements) {
          if (!in_[e.head] || !neg_clear(e.condition)) continue;
          Derivation d{e.head, r->body.pos};
          d.body.insert(d.body.end(), e.condition.pos.begin(), e.condition.pos.end());
          out.push_back(std::move(d));
        }
      } else if (const auto* r = std::get_if<AggregateRule>(&rule)) {
        if (neg_clear(r->body) && count(r->elements) == r->required) out.push_back({r->head, r->body.pos});
      }
    }
    return out;
  }

  // Repeated passes until nothing new is derived; rank is the pass number.
  static std::vector<std::size_t> ranks(std::size_t atoms, const std::vector<Derivation>& rules,
                                        const std::vector<char>* restrict_to) {
    constexpr std::size_t unreached = static_cast<std::size_t>(-1);
    std::vector<std::size_t> rank(atoms, unreached);
    for (std::size_t pass = 0;; ++pass) {
      std::vector<AtomId> fresh;
      for (const auto& d : rules) {
        if (rank[d.head] != unreached) continue;
        if (restrict_to && !(*restrict_to)[d.head]) continue;
        bool ready = std::all_of(d.body.begin(), d.body.end(), [&](AtomId a) { return rank[a] != unreached; });
        if (ready) fresh.push_back(d.head);
      }
      if (fresh.empty()) break;
      for (AtomId a : fresh) rank[a] = pass + 1;
    }
    return rank;
  }

  const std::vector<char>& membership() const { return in_; }

 private:
  const GroundProgram& g_;
  std::vector<char> in_;
};

}  // namespace

ValidationReport validate_answer_set(const GroundProgram& g, const std::vector<GroundAtom>& model,
                                     std::size_t model_id) {
  ValidationReport report;
  report.model_id = model_id;

  std::vector<AtomId> ids;
  std::string unknown;
  for (const auto& a : model) {
    if (auto id = g.atoms.find(a)) {
      ids.push_back(*id);
    } else if (unknown.empty()) {
      unknown = a.to_string();
    }
  }

  Checker check(g, ids);
  if (auto v = check.first_violation(); !v.empty()) {
    report.rule_satisfaction = {false, "violated: " + v};
  }

  const auto reduct = check.reduct();
  constexpr std::size_t unreached = static_cast<std::size_t>(-1);
  const auto least = Checker::ranks(g.atom_count(), reduct, nullptr);
  const auto& in = check.membership();
  if (!unknown.empty()) {
    report.stability = {false, unknown + " does not occur in the ground program"};
  } else {
    for (AtomId a = 0; a < g.atom_count(); ++a) {
      bool derived = least[a] != unreached;
      if (derived != static_cast<bool>(in[a])) {
        report.stability = {false, g.atoms.atom(a).to_string() +
                                       (derived ? " is in the least model of the reduct but not in the answer set"
                                                : " is not in the least model of the reduct")};
        break;
      }
    }
  }

  if (!unknown.empty()) {
    report.reachability = {false, "no derivation for " + unknown};
  } else {
    const auto depth = Checker::ranks(g.atom_count(), reduct, &in);
    for (AtomId a : ids) {
      if (depth[a] == unreached) {
        report.reachability = {false, "no derivation for " + g.atoms.atom(a).to_string()};
        break;
      }
      report.derivation_depth = std::max(report.derivation_depth, depth[a]);
    }
  }
  return report;
}

ValidationReport validate_answer_set(const GroundProgram& g, const AnswerSet& m, std::size_t model_id) {
  std::vector<GroundAtom> atoms;
  atoms.reserve(m.atoms.size());
  for (AtomId id : m.atoms) atoms.push_back(g.atoms.atom(id));
  return validate_answer_set(g, atoms, model_id);
}

ValidationReport validate_answer_set(const Scenario& s, const AnswerSet& m, std::size_t model_id) {
  return validate_answer_set(ground(s.combined()), m, model_id);
}

}  // namespace uamasp
