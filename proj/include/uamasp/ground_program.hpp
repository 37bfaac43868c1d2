#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "uamasp/value.hpp"

namespace uamasp {

using AtomId = std::uint32_t;

struct GroundAtom {
  std::string predicate;
  std::vector<Value> args;

  std::string to_string() const;
  friend bool operator==(const GroundAtom&, const GroundAtom&) = default;
  friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

/// Bijection between dense atom ids and ground atoms, ids in first-seen order.
class SymbolTable {
 public:
  AtomId intern(const GroundAtom& atom);
  std::optional<AtomId> find(const GroundAtom& atom) const;
  std::optional<AtomId> find(const std::string& text) const;
  const GroundAtom& atom(AtomId id) const { return atoms_[id]; }
  std::size_t size() const { return atoms_.size(); }
  const std::vector<GroundAtom>& atoms() const { return atoms_; }

 private:
  std::vector<GroundAtom> atoms_;
  std::unordered_map<std::string, AtomId> index_;
};

struct GroundBody {
  std::vector<AtomId> pos;
  std::vector<AtomId> neg;

  bool empty() const { return pos.empty() && neg.empty(); }
  friend bool operator==(const GroundBody&, const GroundBody&) = default;
  friend auto operator<=>(const GroundBody&, const GroundBody&) = default;
};

struct NormalRule {
  AtomId head = 0;
  GroundBody body;
  friend bool operator==(const NormalRule&, const NormalRule&) = default;
};

struct GroundChoiceElement {
  AtomId head = 0;
  GroundBody condition;
  friend bool operator==(const GroundChoiceElement&, const GroundChoiceElement&) = default;
};

/// lower { heads } upper :- body. A head counts towards the bounds when it
/// is true and its element condition holds.
struct GroundChoiceRule {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::vector<GroundChoiceElement> elements;
  GroundBody body;
  friend bool operator==(const GroundChoiceRule&, const GroundChoiceRule&) = default;
};

struct ConstraintRule {
  GroundBody body;
  friend bool operator==(const ConstraintRule&, const ConstraintRule&) = default;
};

struct GroundCountElement {
  std::vector<Value> tuple;
  GroundBody condition;
  friend bool operator==(const GroundCountElement&, const GroundCountElement&) = default;
};

/// head :- body, required = #count{ elements }. Elements sharing a tuple
/// count once.
struct AggregateRule {
  AtomId head = 0;
  std::vector<GroundCountElement> elements;
  std::int64_t required = 0;
  GroundBody body;
  friend bool operator==(const AggregateRule&, const AggregateRule&) = default;
};

using GroundRule = std::variant<NormalRule, GroundChoiceRule, ConstraintRule, AggregateRule>;

struct Signature {
  std::string predicate;
  std::size_t arity = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

struct GroundProgram {
  SymbolTable atoms;
  std::vector<GroundRule> rules;
  std::vector<Signature> shows;

  /// An atom is shown when its signature is listed, or when nothing is listed.
  bool is_shown(AtomId id) const;
  std::size_t atom_count() const { return atoms.size(); }
};

/// Textual dump, one rule per line with atoms in source syntax.
std::string dump_ground_program(const GroundProgram& g);
std::string format_ground_rule(const GroundProgram& g, const GroundRule& r);

}  // namespace uamasp
