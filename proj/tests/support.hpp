// Shared fixtures for the unit, property and acceptance suites.
#ifndef PARAKERNEL_TESTS_SUPPORT_HPP
#define PARAKERNEL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "parakernel/clauses.hpp"
#include "parakernel/graph.hpp"
#include "parakernel/io.hpp"
#include "parakernel/kernels.hpp"
#include "parakernel/oracle.hpp"

namespace pktest {

using namespace parakernel;

inline std::string fixture_path(const std::string& name) {
  return std::string(PK_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

inline Digraph fixture_graph(const std::string& name) {
  return *io::parse_document(read_fixture(name)).graph();
}

struct CorpusEntry {
  oracle::RandomGraphSpec spec;
  Digraph graph;
};

// n in 3..7, p in {0.15, 0.3, 0.5}, 20 seeds per cell: 300 graphs.
inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    const double probs[] = {0.15, 0.3, 0.5};
    for (std::size_t n = 3; n <= 7; ++n) {
      for (std::size_t pi = 0; pi < 3; ++pi) {
        for (std::uint64_t k = 0; k < 20; ++k) {
          oracle::RandomGraphSpec spec{n, probs[pi], 1000 * n + 100 * pi + k};
          out.push_back({spec, oracle::random_digraph(spec)});
        }
      }
    }
    return out;
  }();
  return entries;
}

inline std::string describe(const oracle::RandomGraphSpec& s) {
  return "n=" + std::to_string(s.n) + " p=" + std::to_string(s.edge_prob) + " seed=" + std::to_string(s.seed);
}

// Literal bit 2a is a, bit 2a+1 is ~a.
using LitMask = std::uint32_t;

inline Clause clause_of_mask(LitMask m) {
  std::vector<Literal> lits;
  for (AtomId a = 0; a < 16; ++a) {
    if (m >> (2 * a) & 1) lits.push_back(Literal::pos(a));
    if (m >> (2 * a + 1) & 1) lits.push_back(Literal::neg(a));
  }
  return Clause(std::move(lits));
}

inline LitMask mask_of_clause(const Clause& c) {
  LitMask m = 0;
  for (const Literal& l : c.literals()) m |= LitMask{1} << (2 * l.atom + (l.negated ? 1 : 0));
  return m;
}

inline Clause random_clause(std::mt19937_64& rng, std::size_t atoms, std::size_t max_len) {
  if (atoms == 0) return Clause{};
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<LitMask> lit(0, static_cast<LitMask>(2 * atoms - 1));
  LitMask m = 0;
  for (std::size_t i = len(rng); i > 0; --i) m |= LitMask{1} << lit(rng);
  return clause_of_mask(m);
}

inline ClausalTheory random_theory(std::mt19937_64& rng, std::size_t atoms, std::size_t max_clauses,
                                   std::size_t max_len) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < atoms; ++i) names.push_back("p" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> count(0, max_clauses);
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<LitMask> lit(0, static_cast<LitMask>(2 * atoms - 1));
  std::vector<Clause> clauses;
  for (std::size_t i = count(rng); i > 0; --i) {
    LitMask m = 0;
    for (std::size_t j = len(rng); j > 0; --j) m |= LitMask{1} << lit(rng);
    clauses.push_back(clause_of_mask(m));
  }
  return ClausalTheory(Universe(names), std::move(clauses));
}

inline Partition3 random_partition(std::mt19937_64& rng, std::size_t atoms) {
  Partition3 p{AtomSet(atoms), AtomSet(atoms), AtomSet(atoms)};
  std::uniform_int_distribution<int> pick(0, 2);
  for (AtomId a = 0; a < atoms; ++a) {
    switch (pick(rng)) {
      case 0: p.true_set.insert(a); break;
      case 1: p.false_set.insert(a); break;
      default: p.paradox_set.insert(a); break;
    }
  }
  return p;
}

// Three-valued satisfaction computed from literal masks, independent of
// parakernel::satisfies.
inline bool mask_satisfies(const Partition3& p, LitMask c, std::size_t atoms) {
  LitMask true_lits = 0, paradox_lits = 0;
  for (AtomId a = 0; a < atoms; ++a) {
    if (p.true_set.contains(a)) true_lits |= LitMask{1} << (2 * a);
    if (p.false_set.contains(a)) true_lits |= LitMask{1} << (2 * a + 1);
    if (p.paradox_set.contains(a)) paradox_lits |= LitMask{3} << (2 * a);
  }
  if (c & true_lits) return true;
  return (c & ~paradox_lits) == 0 && !p.paradox_set.empty();
}

inline bool partition_less(const Partition3& a, const Partition3& b) {
  if (a.true_set == b.true_set) return canonical_less(a.false_set, b.false_set);
  return canonical_less(a.true_set, b.true_set);
}

inline std::vector<Clause> sorted_clauses(std::vector<Clause> cs) {
  std::sort(cs.begin(), cs.end(), [](const Clause& a, const Clause& b) { return canonical_less(a, b); });
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

// Relevant clauses by brute force over every literal set: entailed by all
// models, nonempty, and no nonempty proper subset entailed.
inline std::vector<Clause> brute_relevant(const Digraph& g) {
  const std::size_t n = g.size();
  const auto ms = oracle::brute_models(g);
  const LitMask full = n == 0 ? 0 : static_cast<LitMask>((std::uint64_t{1} << (2 * n)) - 1);
  std::vector<char> entailed(std::size_t{full} + 1), below(std::size_t{full} + 1);
  for (LitMask c = 0; c <= full; ++c) {
    entailed[c] = std::all_of(ms.begin(), ms.end(), [&](const Partition3& m) { return mask_satisfies(m, c, n); });
  }
  std::vector<Clause> out;
  for (LitMask c = 0; c <= full; ++c) {
    bool sub = false;  // some nonempty proper subset entailed
    for (LitMask rest = c; rest; rest &= rest - 1) {
      const LitMask smaller = c & ~(rest & -rest);
      if (smaller && (entailed[smaller] || below[smaller])) sub = true;
    }
    below[c] = sub;
    if (c && entailed[c] && !sub) out.push_back(clause_of_mask(c));
  }
  return sorted_clauses(std::move(out));
}

}  // namespace pktest

#endif
