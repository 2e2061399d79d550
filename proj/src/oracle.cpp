#include "parakernel/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>

#include "parakernel/error.hpp"

namespace parakernel::oracle {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Digraph random_digraph(const RandomGraphSpec& spec) {
  const std::size_t width = std::to_string(spec.n == 0 ? 0 : spec.n - 1).size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < spec.n; ++i) {
    std::string digits = std::to_string(i);
    names.push_back("v" + std::string(width - digits.size(), '0') + digits);
  }
  SplitMix64 rng(spec.seed);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = 0; j < spec.n; ++j) {
      if (rng.next_unit() < spec.edge_prob) edges.emplace_back(names[i], names[j]);
    }
  }
  return Digraph::from_names(names, edges);
}

namespace {

using Mask = std::uint32_t;

struct RawGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

RawGraph raw(const Digraph& g) {
  if (g.size() > kMaxGraphAtoms) {
    throw Error(ErrorKind::Resource, "oracle handles at most " + std::to_string(kMaxGraphAtoms) +
                                         " vertices");
  }
  RawGraph r;
  r.n = g.size();
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      if (g.has_edge(static_cast<AtomId>(x), static_cast<AtomId>(y))) r.edges.emplace_back(x, y);
    }
  }
  return r;
}

bool in(Mask m, std::size_t i) { return ((m >> i) & 1u) != 0; }

Mask successors_of(const RawGraph& g, Mask s) {
  Mask out = 0;
  for (auto [u, v] : g.edges) {
    if (in(s, u)) out |= Mask{1} << v;
  }
  return out;
}

Mask predecessors_of(const RawGraph& g, Mask s) {
  Mask out = 0;
  for (auto [u, v] : g.edges) {
    if (in(s, v)) out |= Mask{1} << u;
  }
  return out;
}

bool semikernel(const RawGraph& g, Mask s) {
  const Mask succ = successors_of(g, s);
  const Mask pred = predecessors_of(g, s);
  return (succ & ~pred) == 0 && (pred & s) == 0;
}

AtomSet to_set(std::size_t n, Mask m) {
  AtomSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (in(m, i)) s.insert(static_cast<AtomId>(i));
  }
  return s;
}

std::vector<Mask> semikernel_masks(const RawGraph& g) {
  std::vector<Mask> out;
  const Mask total = Mask{1} << g.n;
  for (Mask s = 0; s < total; ++s) {
    if (semikernel(g, s)) out.push_back(s);
  }
  return out;
}

std::vector<AtomSet> sorted_sets(std::size_t n, const std::vector<Mask>& masks) {
  std::vector<AtomSet> out;
  for (Mask m : masks) out.push_back(to_set(n, m));
  sort_canonical(out);
  return out;
}

}  // namespace

std::vector<AtomSet> brute_semikernels(const Digraph& g) {
  const RawGraph r = raw(g);
  return sorted_sets(r.n, semikernel_masks(r));
}

std::vector<AtomSet> brute_kernels(const Digraph& g) {
  const RawGraph r = raw(g);
  const Mask all = r.n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << r.n) - 1);
  std::vector<Mask> kernels;
  for (Mask s : semikernel_masks(r)) {
    if (predecessors_of(r, s) == (all & ~s)) kernels.push_back(s);
  }
  return sorted_sets(r.n, kernels);
}

std::vector<Partition3> brute_models(const Digraph& g) {
  const RawGraph r = raw(g);
  const Mask all = r.n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << r.n) - 1);

  std::vector<std::pair<Mask, Mask>> closed;  // (S, ←E[S])
  for (Mask s : semikernel_masks(r)) {
    const Mask domain = s | predecessors_of(r, s);
    bool ok = true;
    for (auto [u, v] : r.edges) {
      if (in(domain, v) && !in(domain, u)) ok = false;
    }
    if (ok) closed.emplace_back(s, domain);
  }

  std::vector<Mask> chosen;
  for (auto [s, domain] : closed) {
    bool maximal = true;
    for (auto [t, other] : closed) {
      if ((domain & ~other) == 0 && domain != other) maximal = false;
    }
    if (maximal) chosen.push_back(s);
  }

  std::vector<AtomSet> trues = sorted_sets(r.n, chosen);
  std::vector<Partition3> out;
  for (const AtomSet& t : trues) {
    Mask s = 0;
    t.for_each([&](AtomId a) { s |= Mask{1} << a; });
    const Mask f = predecessors_of(r, s);
    out.push_back({t, to_set(r.n, f), to_set(r.n, all & ~(s | f))});
  }
  return out;
}

std::vector<AtomSet> truth_table_models(const ClausalTheory& theory) {
  const std::size_t n = theory.universe().size();
  if (n > kMaxTruthTableAtoms) {
    throw Error(ErrorKind::Resource, "truth tables handle at most " +
                                         std::to_string(kMaxTruthTableAtoms) + " atoms");
  }
  std::vector<Mask> models;
  const Mask total = Mask{1} << n;
  for (Mask assignment = 0; assignment < total; ++assignment) {
    bool ok = true;
    for (const Clause& c : theory.clauses()) {
      bool sat = false;
      for (const Literal& l : c.literals()) {
        if (in(assignment, l.atom) != l.negated) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) models.push_back(assignment);
  }
  return sorted_sets(n, models);
}

}  // namespace parakernel::oracle
