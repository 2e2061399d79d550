#ifndef PARAKERNEL_RESOLUTION_HPP
#define PARAKERNEL_RESOLUTION_HPP

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "parakernel/clauses.hpp"
#include "parakernel/kernels.hpp"

namespace parakernel {

struct SaturationLimits {
  std::size_t max_clauses = 1'000'000;
};

enum class Origin { Input, Axiom, Resolvent };

const char* to_string(Origin origin) noexcept;

/// How a closure member was first obtained. For resolvents the pivot atom
/// occurs positively in the first premise and negatively in the second.
struct Derivation {
  Origin origin = Origin::Input;
  std::size_t positive_premise = 0;
  std::size_t negative_premise = 0;
  AtomId pivot = 0;
};

/// RES(Γ): the least clause set containing the input clauses and the axioms
/// {x, ¬x} for every universe atom, closed under binary resolution.
/// Nothing is ever deleted: membership is exactly derivability.
class Closure {
 public:
  const Universe& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return clauses_.size(); }

  /// Clauses in derivation order; premises always precede their resolvents.
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  const Derivation& derivation(std::size_t index) const { return derivations_.at(index); }

  std::optional<std::size_t> index_of(const Clause& c) const;
  bool contains(const Clause& c) const { return index_.contains(c); }
  bool has_empty_clause() const { return contains(Clause{}); }

 private:
  friend Closure saturate(const ClausalTheory& theory, const SaturationLimits& limits);
  friend Closure saturate_wide(const ClausalTheory& theory, const SaturationLimits& limits);

  Universe universe_;
  std::vector<Clause> clauses_;
  std::vector<Derivation> derivations_;
  std::unordered_map<Clause, std::size_t> index_;
};

/// Throws Resource once the closure would exceed limits.max_clauses.
Closure saturate(const ClausalTheory& theory, const SaturationLimits& limits = {});
/// Multi-word clause representation used by saturate() above 31 atoms.
Closure saturate_wide(const ClausalTheory& theory, const SaturationLimits& limits = {});

/// Exact membership. Throws UnknownAtom for atoms outside the universe.
bool derives(const Closure& closure, const Clause& clause);

/// A derivable B ⊆ clause of minimum size (□ allowed), ties broken
/// lexicographically; nullopt if none exists.
std::optional<Clause> witness_subclause(const Closure& closure, const Clause& clause);

/// G⊥ = {x | {x} and {¬x} both derivable}.
AtomSet paradoxical_atoms(const Closure& closure);

struct SubdiscourseReport {
  AtomSet paradox_atoms;   // G⊥, over the theory's universe
  AtomSet healthy_atoms;   // universe ∖ G⊥
  ClausalTheory theory;    // Γ° = Γ ⊘ G⊥
  std::optional<AtomSet> border;  // healthy x with E(x) ⊄ healthy; graphs only
};

/// Γ° together with the split of atoms. When `graph` is given, `theory`
/// must equal clausal_theory(*graph).
SubdiscourseReport consistent_subtheory(const ClausalTheory& theory, const Digraph* graph = nullptr,
                                        const SaturationLimits& limits = {});
SubdiscourseReport consistent_subtheory(const ClausalTheory& theory, const Closure& closure,
                                        const Digraph* graph, const SaturationLimits& limits = {});

struct TwoPartition {
  AtomSet true_set;
  AtomSet false_set;

  friend bool operator==(const TwoPartition&, const TwoPartition&) = default;
};

/// Classical models of Γ°: kernels L of the healthy induced subgraph with
/// border ⊆ ←E(L), each paired with ←E(L). Sets are over g's universe.
std::vector<TwoPartition> cmod_okk(const SubdiscourseReport& report, const Digraph& g,
                                   const EnumerationLimits& limits = {});

enum class Weakening { None, AwBw, Cw };

enum class WitnessKind { None, HealthySubclause, AllParadox };

struct ParaWitness {
  bool holds = false;
  WitnessKind kind = WitnessKind::None;
  std::optional<Clause> subclause;  // set for HealthySubclause
};

/// Saturated theory plus its paradoxical atoms, for repeated queries.
class Reasoner {
 public:
  explicit Reasoner(const ClausalTheory& theory, const SaturationLimits& limits = {});

  const ClausalTheory& theory() const noexcept { return theory_; }
  const Closure& closure() const noexcept { return closure_; }
  const AtomSet& paradox_atoms() const noexcept { return paradox_; }

  /// Γ ⊨ A decided syntactically: A ⊆ G⊥ ≠ ∅, or some nonempty derivable
  /// B ⊆ A uses healthy atoms only.
  bool entails(const Clause& a) const { return explain(a).holds; }
  ParaWitness explain(const Clause& a) const;

  bool provable(const Clause& c, Weakening mode) const;

 private:
  ClausalTheory theory_;
  Closure closure_;
  AtomSet paradox_;
};

bool entails_para(const ClausalTheory& theory, const Clause& a, const SaturationLimits& limits = {});
bool provable_weakened(const ClausalTheory& theory, const Clause& c, Weakening mode,
                       const SaturationLimits& limits = {});

/// RES(Γ ∪ A⁻).
Closure closure_with_assumptions(const ClausalTheory& theory, const Clause& a,
                                 const SaturationLimits& limits = {});

struct ProofStep {
  Clause clause;
  Origin origin = Origin::Input;
  std::size_t positive_premise = 0;  // 0-based step indices, resolvents only
  std::size_t negative_premise = 0;
  AtomId pivot = 0;
};

struct Proof {
  Clause conclusion;
  std::vector<ProofStep> steps;  // last step concludes
};

/// Throws Precondition if the clause is not derivable.
Proof proof_of(const Closure& closure, const Clause& clause);

/// Re-checks every step against the theory; true iff the proof is valid
/// and ends in its conclusion.
bool replay(const Proof& proof, const ClausalTheory& theory);

}  // namespace parakernel

#endif
