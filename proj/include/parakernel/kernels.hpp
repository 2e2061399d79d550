#ifndef PARAKERNEL_KERNELS_HPP
#define PARAKERNEL_KERNELS_HPP

#include <cstddef>
#include <vector>

#include "parakernel/atom_set.hpp"
#include "parakernel/error.hpp"
#include "parakernel/graph.hpp"

namespace parakernel {

/// ⟨true, false, paradox⟩: pairwise disjoint, covering the vertex set.
struct Partition3 {
  AtomSet true_set;
  AtomSet false_set;
  AtomSet paradox_set;

  /// true ∪ false, the part that receives a boolean value.
  AtomSet boolean_domain() const { return true_set | false_set; }

  friend bool operator==(const Partition3&, const Partition3&) = default;
};

struct SubsetReport {
  bool independent = false;
  bool kernel = false;
  bool semikernel = false;
  bool inverse_closed = false;
  bool psk = false;

  friend bool operator==(const SubsetReport&, const SubsetReport&) = default;
};

/// Subset enumeration refuses graphs with more than `max_atoms` vertices.
struct EnumerationLimits {
  std::size_t max_atoms = 20;
};

bool is_independent(const Digraph& g, const AtomSet& s);
/// ←E(S) = G ∖ S and S independent.
bool is_kernel(const Digraph& g, const AtomSet& s);
/// E(S) ⊆ ←E(S) ⊆ G ∖ S.
bool is_semikernel(const Digraph& g, const AtomSet& s);

SubsetReport classify_subset(const Digraph& g, const AtomSet& s);

/// α_S = ⟨S, ←E(S), G ∖ ←E[S]⟩. Throws Precondition unless S is independent.
Partition3 partition_of(const Digraph& g, const AtomSet& s);

/// True iff p is the partition of an ←E-closed semikernel.
bool is_psk_partition(const Digraph& g, const Partition3& p);

std::vector<AtomSet> enumerate_kernels(const Digraph& g, const EnumerationLimits& limits = {});
/// All semikernels, ∅ included.
std::vector<AtomSet> enumerate_semikernels(const Digraph& g, const EnumerationLimits& limits = {});
/// Semikernels that are ←E-closed.
std::vector<AtomSet> enumerate_closed_semikernels(const Digraph& g,
                                                  const EnumerationLimits& limits = {});

/// The paraconsistent models: partitions of the ←E-closed semikernels
/// whose domain ←E[S] is maximal under inclusion. Never empty.
std::vector<Partition3> models(const Digraph& g, const EnumerationLimits& limits = {});

/// S ∩ E*(T) for T ⊆ S ∈ SK(G); the result is again a semikernel.
AtomSet sk_intersect_reach(const Digraph& g, const AtomSet& s, const AtomSet& t);

/// S ∪ T for S, T ∈ SK(G) with ←E(S) ∩ T = ∅; the result is a semikernel.
AtomSet sk_union(const Digraph& g, const AtomSet& s, const AtomSet& t);

class CombineError : public Error {
 public:
  enum class Reason { AlphaNotPsk, BetaNotPsk, NoOverlap };

  CombineError(Reason reason, const std::string& message)
      : Error(ErrorKind::Precondition, message), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Extends the pSK partition α by the part of β that lies in α's paradox
/// set: returns the partition of α⊤ ∪ (β⊤ ∩ α°). The result is pSK and its
/// boolean domain strictly contains α's.
///
/// Checks α first, then that β's boolean domain reaches into α°, then β.
Partition3 combine_psk(const Digraph& g, const Partition3& alpha, const Partition3& beta);

}  // namespace parakernel

#endif
