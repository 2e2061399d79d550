#ifndef PARAKERNEL_CONSEQUENCE_HPP
#define PARAKERNEL_CONSEQUENCE_HPP

#include <optional>
#include <vector>

#include "parakernel/clauses.hpp"
#include "parakernel/kernels.hpp"
#include "parakernel/resolution.hpp"

namespace parakernel {

/// Three-valued clause satisfaction: some positive literal is true, some
/// negative literal is false, or every atom of the clause is paradoxical
/// and the paradox set is nonempty. □ holds iff the paradox set is nonempty.
bool satisfies(const Partition3& p, const Clause& c);

enum class VerdictBasis { HealthyWitness, AllParadox, Countermodel };

const char* to_string(VerdictBasis basis) noexcept;

struct EntailmentVerdict {
  bool holds = false;
  VerdictBasis via = VerdictBasis::Countermodel;
  std::optional<Clause> witness;            // HealthyWitness: literals over healthy atoms
  std::optional<Partition3> countermodel;   // Countermodel
};

/// Γ ⊨ C by checking every model of g.
EntailmentVerdict entails_semantic(const Digraph& g, const Clause& c,
                                   const EnumerationLimits& limits = {});
/// Same, over an already computed model list (all over one universe).
EntailmentVerdict entails_semantic(const std::vector<Partition3>& models, const Clause& c);

/// Γ ⊨_c C by truth tables over the theory's universe.
bool classical_entails(const ClausalTheory& theory, const Clause& c,
                       const EnumerationLimits& limits = {});

/// Γ ⊨_r C: entailed, and no nonempty proper subclause is. Throws
/// Precondition for □.
bool is_relevant(const Reasoner& reasoner, const Clause& c);
bool is_relevant(const ClausalTheory& theory, const Clause& c, const SaturationLimits& limits = {});

/// Min(Γ): nonempty derivable clauses without a nonempty proper derivable
/// subclause, in canonical order.
std::vector<Clause> min_clauses(const Reasoner& reasoner);
std::vector<Clause> min_clauses(const ClausalTheory& theory, const SaturationLimits& limits = {});

/// Min(Γ) assembled from the consistent subtheory: the minimal derivable
/// clauses of Γ° plus both unit clauses of every paradoxical atom.
std::vector<Clause> min_clauses_via_subtheory(const ClausalTheory& theory,
                                              const SaturationLimits& limits = {});

/// No derivable clause of cth(g) mixes two components of the underlying
/// undirected graph, and any two atoms of one component occur together in
/// some derivable clause.
bool component_claim_check(const Digraph& g, const SaturationLimits& limits = {});

}  // namespace parakernel

#endif
