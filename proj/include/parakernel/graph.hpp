#ifndef PARAKERNEL_GRAPH_HPP
#define PARAKERNEL_GRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "parakernel/atom_set.hpp"

namespace parakernel {

/// True for non-empty names built from letters, digits, '_' and '\''.
bool is_valid_atom_name(std::string_view name) noexcept;

/// An ordered, duplicate-free set of atom names with dense indices.
///
/// Index order equals byte-wise lexicographic order of the names, so every
/// iteration over indices is also an iteration in name order.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(AtomId a) const { return names_.at(a); }

  std::optional<AtomId> find(std::string_view name) const;
  /// Throws ErrorKind::UnknownAtom.
  AtomId at(std::string_view name) const;

  AtomSet empty_set() const { return AtomSet(size()); }
  AtomSet all() const { return AtomSet::full(size()); }
  AtomSet set_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const AtomSet& s) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomId> index_;
};

using Edge = std::pair<AtomId, AtomId>;

/// A finite directed graph over a universe of atoms. Loops are allowed,
/// parallel edges collapse.
class Digraph {
 public:
  Digraph() = default;
  Digraph(Universe vertices, const std::vector<Edge>& edges);

  static Digraph from_names(std::vector<std::string> vertices,
                            const std::vector<std::pair<std::string, std::string>>& edges);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return universe_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const AtomSet& successors(AtomId x) const { return out_.at(x); }
  const AtomSet& predecessors(AtomId x) const { return in_.at(x); }
  bool has_edge(AtomId from, AtomId to) const { return out_.at(from).contains(to); }

  /// All edges ordered by (source, target).
  std::vector<Edge> edges() const;

  /// E(S): union of successors.
  AtomSet out(const AtomSet& s) const;
  /// ←E(S): union of predecessors.
  AtomSet in(const AtomSet& s) const;
  /// ←E[S] = S ∪ ←E(S).
  AtomSet in_closed(const AtomSet& s) const { return s | in(s); }

  AtomSet set_of(const std::vector<std::string>& names) const { return universe_.set_of(names); }
  std::vector<std::string> names_of(const AtomSet& s) const { return universe_.names_of(s); }

  /// Throws Precondition if `s` was built for another universe.
  void require_member_set(const AtomSet& s) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.universe_ == b.universe_ && a.out_ == b.out_;
  }

 private:
  Universe universe_;
  std::vector<AtomSet> out_;
  std::vector<AtomSet> in_;
  std::size_t edge_count_ = 0;
};

/// A theory in graph normal form: each atom x maps to the atoms y_i of
/// its defining formula x <-> AND(not y_i). An empty right side is a sink.
struct GnfTheory {
  std::map<std::string, std::set<std::string>> formulas;

  /// Right-hand atoms without their own formula, in name order.
  std::vector<std::string> loose_atoms() const;
  bool well_formed() const { return loose_atoms().empty(); }

  friend bool operator==(const GnfTheory&, const GnfTheory&) = default;
};

/// Throws Validation naming the first loose atom.
Digraph theory_to_graph(const GnfTheory& theory);
GnfTheory graph_to_theory(const Digraph& g);

struct Neighborhoods {
  AtomSet out;
  AtomSet in;
  AtomSet in_closed;
};

Neighborhoods neighborhoods(const Digraph& g, const AtomSet& s);

enum class Direction { Forward, Backward };

/// Reflexive-transitive closure: E*(S) or ←E*(S).
AtomSet reachable(const Digraph& g, const AtomSet& s, Direction direction);

/// ←E(←E[S]) ⊆ ←E[S].
bool is_inverse_closed(const Digraph& g, const AtomSet& s);

/// Subgraph induced by `x`, re-indexed over the universe `x`.
Digraph induced_subgraph(const Digraph& g, const AtomSet& x);

/// Connected components of the underlying undirected graph, each listed
/// as a set over g's universe, ordered by their smallest atom.
std::vector<AtomSet> underlying_components(const Digraph& g);

/// Replaces every loose atom b by the pair b <-> not b', b' <-> not b with
/// a fresh name b', b'', ... Well-formed input is returned unchanged.
GnfTheory complete_loose_atoms(const GnfTheory& theory);

}  // namespace parakernel

#endif
