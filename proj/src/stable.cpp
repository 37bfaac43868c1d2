#include "uamasp/stable.hpp"

#include <algorithm>
#include <set>

namespace uamasp {

std::vector<char> membership(std::size_t atom_count, const std::vector<AtomId>& atoms) {
  std::vector<char> m(atom_count, 0);
  for (AtomId a : atoms) {
    if (a < atom_count) m[a] = 1;
  }
  return m;
}

namespace {

bool body_holds(const GroundBody& b, const std::vector<char>& m) {
  for (AtomId p : b.pos) {
    if (!m[p]) return false;
  }
  for (AtomId q : b.neg) {
    if (m[q]) return false;
  }
  return true;
}

bool neg_clear(const GroundBody& b, const std::vector<char>& m) {
  for (AtomId q : b.neg) {
    if (q < m.size() && m[q]) return false;
  }
  return true;
}

}  // namespace

NormalizedProgram normalize_choices(const GroundProgram& g) {
  NormalizedProgram n;
  n.original_atoms = g.atom_count();
  n.total_atoms = n.original_atoms;
  n.complement_of.assign(n.original_atoms, NormalizedProgram::npos);
  for (const auto& rule : g.rules) {
    if (const auto* c = std::get_if<GroundChoiceRule>(&rule)) {
      for (const auto& e : c->elements) {
        if (n.complement_of[e.head] == NormalizedProgram::npos) {
          n.complement_of[e.head] = static_cast<AtomId>(n.total_atoms++);
        }
      }
    }
  }
  for (const auto& rule : g.rules) {
    if (const auto* r = std::get_if<NormalRule>(&rule)) {
      n.rules.push_back(*r);
    } else if (const auto* c = std::get_if<GroundChoiceRule>(&rule)) {
      for (const auto& e : c->elements) {
        const AtomId star = n.complement_of[e.head];
        NormalRule chosen{e.head, c->body};
        chosen.body.pos.insert(chosen.body.pos.end(), e.condition.pos.begin(), e.condition.pos.end());
        chosen.body.neg.insert(chosen.body.neg.end(), e.condition.neg.begin(), e.condition.neg.end());
        NormalRule dropped = chosen;
        dropped.head = star;
        chosen.body.neg.push_back(star);
        dropped.body.neg.push_back(e.head);
        n.rules.push_back(std::move(chosen));
        n.rules.push_back(std::move(dropped));
      }
    } else if (const auto* a = std::get_if<AggregateRule>(&rule)) {
      n.aggregates.push_back(a);
    }
  }
  return n;
}

DefiniteProgram gl_reduct(const NormalizedProgram& n, const std::vector<AtomId>& candidate) {
  std::vector<char> m = membership(n.total_atoms, candidate);
  for (std::size_t a = 0; a < n.original_atoms; ++a) {
    const AtomId star = n.complement_of[a];
    if (star != NormalizedProgram::npos) m[star] = m[a] ? 0 : 1;
  }
  DefiniteProgram d;
  d.atom_count = n.total_atoms;
  for (const auto& r : n.rules) {
    if (!neg_clear(r.body, m)) continue;
    d.rules.push_back({r.head, r.body.pos});
  }
  for (const auto* a : n.aggregates) {
    if (!neg_clear(a->body, m)) continue;
    if (eval_aggregate(a->elements, m) != a->required) continue;
    d.rules.push_back({a->head, a->body.pos});
  }
  return d;
}

DefiniteProgram gl_reduct(const GroundProgram& g, const std::vector<AtomId>& candidate) {
  return gl_reduct(normalize_choices(g), candidate);
}

std::vector<AtomId> least_model(const DefiniteProgram& p) {
  // Counter-based forward chaining: a rule fires when its last body atom arrives.
  std::vector<std::vector<std::size_t>> watch(p.atom_count);
  std::vector<std::size_t> missing(p.rules.size());
  std::vector<char> in(p.atom_count, 0);
  std::vector<AtomId> queue;
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    std::vector<AtomId> body = p.rules[i].body;
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
    missing[i] = body.size();
    for (AtomId b : body) watch[b].push_back(i);
    if (body.empty() && !in[p.rules[i].head]) {
      in[p.rules[i].head] = 1;
      queue.push_back(p.rules[i].head);
    }
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::size_t r : watch[queue[q]]) {
      if (--missing[r] == 0 && !in[p.rules[r].head]) {
        in[p.rules[r].head] = 1;
        queue.push_back(p.rules[r].head);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::int64_t eval_aggregate(const std::vector<GroundCountElement>& elements, const std::vector<char>& member) {
  std::set<std::vector<Value>> keys;
  for (const auto& e : elements) {
    bool ok = true;
    for (AtomId p : e.condition.pos) ok = ok && p < member.size() && member[p];
    for (AtomId q : e.condition.neg) ok = ok && !(q < member.size() && member[q]);
    if (ok) keys.insert(e.tuple);
  }
  return static_cast<std::int64_t>(keys.size());
}

std::int64_t eval_aggregate(const std::vector<GroundCountElement>& elements, const std::vector<AtomId>& candidate) {
  std::size_t top = 0;
  for (const auto& e : elements) {
    for (AtomId p : e.condition.pos) top = std::max<std::size_t>(top, p + 1);
    for (AtomId q : e.condition.neg) top = std::max<std::size_t>(top, q + 1);
  }
  for (AtomId a : candidate) top = std::max<std::size_t>(top, a + 1);
  return eval_aggregate(elements, membership(top, candidate));
}

StabilityCheck is_stable(const GroundProgram& g, const std::vector<AtomId>& candidate) {
  StabilityCheck out;
  const std::size_t n = g.atom_count();
  for (AtomId a : candidate) {
    if (a >= n) {
      out.diagnosis = "atom id " + std::to_string(a) + " is not in the symbol table";
      return out;
    }
  }
  const std::vector<char> m = membership(n, candidate);
  for (const auto& rule : g.rules) {
    bool violated = false;
    if (const auto* r = std::get_if<NormalRule>(&rule)) {
      violated = body_holds(r->body, m) && !m[r->head];
    } else if (const auto* k = std::get_if<ConstraintRule>(&rule)) {
      violated = body_holds(k->body, m);
    } else if (const auto* c = std::get_if<GroundChoiceRule>(&rule)) {
      if (body_holds(c->body, m)) {
        std::int64_t count = 0;
        for (const auto& e : c->elements) count += (m[e.head] && body_holds(e.condition, m)) ? 1 : 0;
        violated = count < c->lower || count > c->upper;
      }
    } else if (const auto* a = std::get_if<AggregateRule>(&rule)) {
      violated = body_holds(a->body, m) && eval_aggregate(a->elements, m) == a->required && !m[a->head];
    }
    if (violated) {
      out.diagnosis = "violated rule: " + format_ground_rule(g, rule);
      return out;
    }
  }
  const std::vector<AtomId> lm = least_model(gl_reduct(g, candidate));
  std::vector<char> derived(n, 0);
  for (AtomId a : lm) {
    if (a < n) derived[a] = 1;
  }
  for (AtomId a = 0; a < n; ++a) {
    if (m[a] && !derived[a]) {
      out.diagnosis = "unfounded atom: " + g.atoms.atom(a).to_string();
      return out;
    }
    if (!m[a] && derived[a]) {
      out.diagnosis = "derivable atom missing: " + g.atoms.atom(a).to_string();
      return out;
    }
  }
  out.stable = true;
  return out;
}

}  // namespace uamasp
