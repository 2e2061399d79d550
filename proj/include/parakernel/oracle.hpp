#ifndef PARAKERNEL_ORACLE_HPP
#define PARAKERNEL_ORACLE_HPP

// Brute-force reference implementations. They work on raw edge lists and
// 32-bit subset masks and share no code with the kernel or resolution
// engines, so the two can be compared against each other.

#include <cstdint>
#include <vector>

#include "parakernel/clauses.hpp"
#include "parakernel/graph.hpp"
#include "parakernel/kernels.hpp"

namespace parakernel::oracle {

inline constexpr std::size_t kMaxGraphAtoms = 16;
inline constexpr std::size_t kMaxTruthTableAtoms = 20;

/// SplitMix64 (Steele, Lea, Flood 2014):
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Top 53 bits scaled into [0, 1).
  double next_unit();

 private:
  std::uint64_t state_;
};

struct RandomGraphSpec {
  std::size_t n = 0;
  double edge_prob = 0.0;
  std::uint64_t seed = 0;
};

/// Vertices are named v0..v(n-1), zero-padded to a common width so name
/// order equals numeric order. Ordered pairs (i, j), loops included, are
/// visited row-major (i outer, j inner); each draws one next_unit() from a
/// SplitMix64 seeded with `seed` and becomes an edge iff the draw is below
/// edge_prob.
Digraph random_digraph(const RandomGraphSpec& spec);

std::vector<AtomSet> brute_semikernels(const Digraph& g);
std::vector<AtomSet> brute_kernels(const Digraph& g);
std::vector<Partition3> brute_models(const Digraph& g);

/// True-sets of all total assignments satisfying every clause, over the
/// theory's universe.
std::vector<AtomSet> truth_table_models(const ClausalTheory& theory);

}  // namespace parakernel::oracle

#endif
