#include "parakernel/clauses.hpp"

#include <algorithm>

#include "parakernel/error.hpp"

namespace parakernel {

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

bool Clause::contains(Literal l) const {
  return std::binary_search(literals_.begin(), literals_.end(), l);
}

bool Clause::is_subset_of(const Clause& other) const {
  return std::includes(other.literals_.begin(), other.literals_.end(), literals_.begin(),
                       literals_.end());
}

bool Clause::is_tautology() const {
  for (std::size_t i = 1; i < literals_.size(); ++i) {
    if (literals_[i].atom == literals_[i - 1].atom) return true;
  }
  return false;
}

AtomSet Clause::atoms(std::size_t universe_size) const {
  AtomSet s(universe_size);
  for (const Literal& l : literals_) {
    if (l.atom >= universe_size) throw Error(ErrorKind::UnknownAtom, "literal outside universe");
    s.insert(l.atom);
  }
  return s;
}

Clause Clause::without_atoms(const AtomSet& x) const {
  Clause out;
  for (const Literal& l : literals_) {
    if (!x.contains(l.atom)) out.literals_.push_back(l);
  }
  return out;
}

std::size_t Clause::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const Literal& l : literals_) {
    h ^= (static_cast<std::size_t>(l.atom) << 1) | (l.negated ? 1u : 0u);
    h *= 1099511628211ull;
  }
  return h;
}

bool canonical_less(const Clause& a, const Clause& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string to_string(const Clause& c, const Universe& universe) {
  if (c.empty()) return "[]";
  std::string out;
  for (const Literal& l : c.literals()) {
    if (!out.empty()) out += ' ';
    if (l.negated) out += '~';
    out += universe.name(l.atom);
  }
  return out;
}

ClausalTheory::ClausalTheory(Universe universe, std::vector<Clause> clauses)
    : universe_(std::move(universe)), clauses_(std::move(clauses)) {
  for (const Clause& c : clauses_) require_clause(c);
  std::sort(clauses_.begin(), clauses_.end(), [](const Clause& a, const Clause& b) {
    return canonical_less(a, b);
  });
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

bool ClausalTheory::contains(const Clause& c) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), c,
                            [](const Clause& a, const Clause& b) { return canonical_less(a, b); });
}

ClausalTheory ClausalTheory::with_clauses(const std::vector<Clause>& extra) const {
  std::vector<Clause> all = clauses_;
  all.insert(all.end(), extra.begin(), extra.end());
  return ClausalTheory(universe_, std::move(all));
}

void ClausalTheory::require_clause(const Clause& c) const {
  if (c.atom_bound() > universe_.size()) {
    throw Error(ErrorKind::UnknownAtom, "clause mentions an atom outside the theory's universe");
  }
}

std::vector<Clause> clausal_theory_multiset(const Digraph& g) {
  std::vector<Clause> out;
  for (AtomId x = 0; x < g.size(); ++x) {
    std::vector<Literal> ors{Literal::pos(x)};
    g.successors(x).for_each([&](AtomId y) { ors.push_back(Literal::pos(y)); });
    out.emplace_back(std::move(ors));
    g.successors(x).for_each([&](AtomId y) { out.push_back(Clause{Literal::neg(x), Literal::neg(y)}); });
  }
  return out;
}

ClausalTheory clausal_theory(const Digraph& g) {
  return ClausalTheory(g.universe(), clausal_theory_multiset(g));
}

std::vector<Clause> complement_units(const Clause& c) {
  std::vector<Clause> out;
  out.reserve(c.size());
  for (const Literal& l : c.literals()) out.push_back(Clause{l.complement()});
  return out;
}

Clause translate(const Clause& c, const Universe& from, const Universe& to) {
  std::vector<Literal> lits;
  lits.reserve(c.size());
  for (const Literal& l : c.literals()) lits.push_back({to.at(from.name(l.atom)), l.negated});
  return Clause(std::move(lits));
}

ClausalTheory remove_atoms(const ClausalTheory& t, const AtomSet& x) {
  const Universe& from = t.universe();
  if (x.universe_size() != from.size()) {
    throw Error(ErrorKind::Precondition, "atom set does not belong to the theory's universe");
  }
  Universe to(from.names_of(from.all() - x));
  std::vector<Clause> kept;
  for (const Clause& c : t.clauses()) {
    Clause stripped = c.without_atoms(x);
    if (!stripped.empty()) kept.push_back(translate(stripped, from, to));
  }
  return ClausalTheory(std::move(to), std::move(kept));
}

}  // namespace parakernel
