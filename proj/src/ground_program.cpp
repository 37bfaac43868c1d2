#include "uamasp/ground_program.hpp"

#include <algorithm>
#include <sstream>

namespace uamasp {

std::string GroundAtom::to_string() const {
  std::string out = predicate;
  if (!args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ',';
      out += args[i].to_string();
    }
    out += ')';
  }
  return out;
}

AtomId SymbolTable::intern(const GroundAtom& atom) {
  auto [it, inserted] = index_.try_emplace(atom.to_string(), static_cast<AtomId>(atoms_.size()));
  if (inserted) atoms_.push_back(atom);
  return it->second;
}

std::optional<AtomId> SymbolTable::find(const GroundAtom& atom) const { return find(atom.to_string()); }

std::optional<AtomId> SymbolTable::find(const std::string& text) const {
  auto it = index_.find(text);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool GroundProgram::is_shown(AtomId id) const {
  if (shows.empty()) return true;
  const GroundAtom& a = atoms.atom(id);
  return std::find(shows.begin(), shows.end(), Signature{a.predicate, a.args.size()}) != shows.end();
}

namespace {

void print_body(std::ostream& os, const GroundProgram& g, const GroundBody& b, bool& first) {
  for (AtomId p : b.pos) {
    os << (first ? "" : ", ") << g.atoms.atom(p).to_string();
    first = false;
  }
  for (AtomId n : b.neg) {
    os << (first ? "" : ", ") << "not " << g.atoms.atom(n).to_string();
    first = false;
  }
}

void print_condition(std::ostream& os, const GroundProgram& g, const GroundBody& b) {
  if (b.empty()) return;
  os << ": ";
  bool first = true;
  print_body(os, g, b, first);
}

}  // namespace

std::string format_ground_rule(const GroundProgram& g, const GroundRule& rule) {
  std::ostringstream os;
  std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        bool first = true;
        if constexpr (std::is_same_v<R, NormalRule>) {
          os << g.atoms.atom(r.head).to_string();
          if (!r.body.empty()) {
            os << " :- ";
            print_body(os, g, r.body, first);
          }
        } else if constexpr (std::is_same_v<R, GroundChoiceRule>) {
          os << r.lower << '{';
          for (std::size_t i = 0; i < r.elements.size(); ++i) {
            if (i) os << "; ";
            os << g.atoms.atom(r.elements[i].head).to_string();
            print_condition(os, g, r.elements[i].condition);
          }
          os << '}' << r.upper;
          if (!r.body.empty()) {
            os << " :- ";
            print_body(os, g, r.body, first);
          }
        } else if constexpr (std::is_same_v<R, ConstraintRule>) {
          os << ":-";
          if (!r.body.empty()) os << ' ';
          print_body(os, g, r.body, first);
        } else {
          os << g.atoms.atom(r.head).to_string() << " :- ";
          print_body(os, g, r.body, first);
          os << (first ? "" : ", ") << r.required << " = #count{";
          for (std::size_t i = 0; i < r.elements.size(); ++i) {
            if (i) os << "; ";
            const auto& e = r.elements[i];
            for (std::size_t k = 0; k < e.tuple.size(); ++k) os << (k ? "," : "") << e.tuple[k].to_string();
            print_condition(os, g, e.condition);
          }
          os << '}';
        }
        os << '.';
      },
      rule);
  return os.str();
}

std::string dump_ground_program(const GroundProgram& g) {
  std::string out;
  for (const auto& r : g.rules) {
    out += format_ground_rule(g, r);
    out += '\n';
  }
  for (const auto& s : g.shows) out += "#show " + s.predicate + "/" + std::to_string(s.arity) + ".\n";
  return out;
}

}  // namespace uamasp
