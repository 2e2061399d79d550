#ifndef PARAKERNEL_CLAUSES_HPP
#define PARAKERNEL_CLAUSES_HPP

#include <compare>
#include <string>
#include <vector>

#include "parakernel/atom_set.hpp"
#include "parakernel/graph.hpp"

namespace parakernel {

struct Literal {
  AtomId atom = 0;
  bool negated = false;

  static Literal pos(AtomId a) { return {a, false}; }
  static Literal neg(AtomId a) { return {a, true}; }

  Literal complement() const { return {atom, !negated}; }

  // Ordered by atom, positive before negative.
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// A finite set of literals. The literal vector is always sorted and
/// duplicate-free; the empty clause is a valid value. A clause may hold
/// both polarities of an atom.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals)
      : Clause(std::vector<Literal>(literals)) {}

  const std::vector<Literal>& literals() const noexcept { return literals_; }
  bool empty() const noexcept { return literals_.empty(); }
  std::size_t size() const noexcept { return literals_.size(); }

  bool contains(Literal l) const;
  bool is_subset_of(const Clause& other) const;
  bool is_tautology() const;

  /// Atoms occurring in either polarity.
  AtomSet atoms(std::size_t universe_size) const;
  /// Literals whose atom is not in `x`.
  Clause without_atoms(const AtomSet& x) const;
  /// Largest atom index plus one; 0 for the empty clause.
  std::size_t atom_bound() const noexcept {
    return literals_.empty() ? 0 : literals_.back().atom + 1;
  }

  // Lexicographic on the literal sequence.
  friend auto operator<=>(const Clause&, const Clause&) = default;

  std::size_t hash() const noexcept;

 private:
  std::vector<Literal> literals_;
};

/// Display order: shorter clauses first, then lexicographic.
bool canonical_less(const Clause& a, const Clause& b);

/// "a ~b c"; the empty clause prints as "[]".
std::string to_string(const Clause& c, const Universe& universe);

/// A finite set of clauses over an explicitly fixed atom universe.
class ClausalTheory {
 public:
  ClausalTheory() = default;
  /// Throws UnknownAtom if a clause mentions an atom outside the universe.
  ClausalTheory(Universe universe, std::vector<Clause> clauses);

  const Universe& universe() const noexcept { return universe_; }
  /// Sorted by canonical_less, no duplicates.
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  std::size_t size() const noexcept { return clauses_.size(); }
  bool contains(const Clause& c) const;

  ClausalTheory with_clauses(const std::vector<Clause>& extra) const;

  /// Throws UnknownAtom if `c` mentions atoms outside the universe.
  void require_clause(const Clause& c) const;

  friend bool operator==(const ClausalTheory& a, const ClausalTheory& b) {
    return a.universe_ == b.universe_ && a.clauses_ == b.clauses_;
  }

 private:
  Universe universe_;
  std::vector<Clause> clauses_;
};

/// cth(G) before set semantics: for every vertex x the ors-clause
/// {x} ∪ E(x) followed by one nand-clause {¬x,¬y} per edge x→y.
std::vector<Clause> clausal_theory_multiset(const Digraph& g);

/// cth(G) with duplicates removed; the universe is the vertex set.
ClausalTheory clausal_theory(const Digraph& g);

/// C⁻: one unit clause per literal of c, polarity flipped.
std::vector<Clause> complement_units(const Clause& c);

/// Γ⊘X: strips all literals over X, drops clauses that become empty and
/// shrinks the universe to universe ∖ X (indices are remapped).
ClausalTheory remove_atoms(const ClausalTheory& t, const AtomSet& x);

/// Re-expresses a clause of `from` over the universe `to` (by name).
/// Throws UnknownAtom if some atom is missing in `to`.
Clause translate(const Clause& c, const Universe& from, const Universe& to);

}  // namespace parakernel

template <>
struct std::hash<parakernel::Clause> {
  std::size_t operator()(const parakernel::Clause& c) const noexcept { return c.hash(); }
};

#endif
