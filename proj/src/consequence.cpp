#include "parakernel/consequence.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace parakernel {

const char* to_string(VerdictBasis basis) noexcept {
  switch (basis) {
    case VerdictBasis::HealthyWitness: return "healthy-witness";
    case VerdictBasis::AllParadox: return "all-paradox";
    case VerdictBasis::Countermodel: return "countermodel";
  }
  return "?";
}

bool satisfies(const Partition3& p, const Clause& c) {
  if (c.atom_bound() > p.true_set.universe_size()) {
    throw Error(ErrorKind::UnknownAtom, "clause mentions an atom outside the partition");
  }
  bool all_paradox = true;
  for (const Literal& l : c.literals()) {
    if (!l.negated && p.true_set.contains(l.atom)) return true;
    if (l.negated && p.false_set.contains(l.atom)) return true;
    if (!p.paradox_set.contains(l.atom)) all_paradox = false;
  }
  return all_paradox && !p.paradox_set.empty();
}

EntailmentVerdict entails_semantic(const std::vector<Partition3>& models, const Clause& c) {
  EntailmentVerdict v;
  for (const Partition3& m : models) {
    if (!satisfies(m, c)) {
      v.holds = false;
      v.via = VerdictBasis::Countermodel;
      v.countermodel = m;
      return v;
    }
  }
  if (models.empty()) throw_internal("empty model list");
  v.holds = true;
  Clause healthy = c.without_atoms(models.front().paradox_set);
  if (healthy.empty()) {
    v.via = VerdictBasis::AllParadox;
  } else {
    v.via = VerdictBasis::HealthyWitness;
    v.witness = std::move(healthy);
  }
  return v;
}

EntailmentVerdict entails_semantic(const Digraph& g, const Clause& c,
                                   const EnumerationLimits& limits) {
  if (c.atom_bound() > g.size()) {
    throw Error(ErrorKind::UnknownAtom, "clause mentions an atom outside the graph");
  }
  return entails_semantic(models(g, limits), c);
}

bool classical_entails(const ClausalTheory& theory, const Clause& c,
                       const EnumerationLimits& limits) {
  theory.require_clause(c);
  const std::size_t n = theory.universe().size();
  if (n > limits.max_atoms || n > 62) {
    throw Error(ErrorKind::Resource, "truth table over " + std::to_string(n) +
                                         " atoms exceeds the cap of " +
                                         std::to_string(limits.max_atoms));
  }
  auto masks = [](const Clause& cl) {
    std::pair<std::uint64_t, std::uint64_t> m{0, 0};
    for (const Literal& l : cl.literals()) {
      (l.negated ? m.second : m.first) |= std::uint64_t{1} << l.atom;
    }
    return m;
  };
  std::vector<std::pair<std::uint64_t, std::uint64_t>> theory_masks;
  for (const Clause& cl : theory.clauses()) theory_masks.push_back(masks(cl));
  const auto goal = masks(c);
  auto holds = [](std::pair<std::uint64_t, std::uint64_t> m, std::uint64_t assignment) {
    return (m.first & assignment) != 0 || (m.second & ~assignment) != 0;
  };
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t assignment = 0; assignment < total; ++assignment) {
    const bool model = std::all_of(theory_masks.begin(), theory_masks.end(),
                                   [&](const auto& m) { return holds(m, assignment); });
    if (model && !holds(goal, assignment)) return false;
  }
  return true;
}

bool is_relevant(const Reasoner& reasoner, const Clause& c) {
  if (c.empty()) throw Error(ErrorKind::Precondition, "relevance is undefined for the empty clause");
  reasoner.theory().require_clause(c);
  if (c.size() > 30) throw Error(ErrorKind::Resource, "clause too long for subclause enumeration");
  if (!reasoner.entails(c)) return false;
  const auto& lits = c.literals();
  const std::uint64_t full = (std::uint64_t{1} << lits.size()) - 1;
  for (std::uint64_t pick = 1; pick < full; ++pick) {
    std::vector<Literal> sub;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if ((pick >> i) & 1u) sub.push_back(lits[i]);
    }
    if (reasoner.entails(Clause(std::move(sub)))) return false;
  }
  return true;
}

bool is_relevant(const ClausalTheory& theory, const Clause& c, const SaturationLimits& limits) {
  theory.require_clause(c);
  return is_relevant(Reasoner(theory, limits), c);
}

namespace {

// Memoised "some nonempty derivable D ⊆ x".
class DerivableBelow {
 public:
  explicit DerivableBelow(const Closure& closure) : closure_(closure) {}

  bool operator()(const Clause& x) {
    if (x.empty()) return false;
    if (closure_.contains(x)) return true;
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    bool found = false;
    for (std::size_t i = 0; i < x.size() && !found; ++i) found = (*this)(drop(x, i));
    memo_.emplace(x, found);
    return found;
  }

  static Clause drop(const Clause& x, std::size_t i) {
    std::vector<Literal> lits = x.literals();
    lits.erase(lits.begin() + static_cast<std::ptrdiff_t>(i));
    return Clause(std::move(lits));
  }

 private:
  const Closure& closure_;
  std::unordered_map<Clause, bool> memo_;
};

std::vector<Clause> minimal_members(const Closure& closure) {
  DerivableBelow below(closure);
  std::vector<Clause> out;
  for (const Clause& c : closure.clauses()) {
    if (c.empty()) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < c.size() && minimal; ++i) {
      if (below(DerivableBelow::drop(c, i))) minimal = false;
    }
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const Clause& a, const Clause& b) { return canonical_less(a, b); });
  return out;
}

}  // namespace

std::vector<Clause> min_clauses(const Reasoner& reasoner) { return minimal_members(reasoner.closure()); }

std::vector<Clause> min_clauses(const ClausalTheory& theory, const SaturationLimits& limits) {
  return min_clauses(Reasoner(theory, limits));
}

std::vector<Clause> min_clauses_via_subtheory(const ClausalTheory& theory,
                                              const SaturationLimits& limits) {
  const Reasoner whole(theory, limits);
  const ClausalTheory healthy = remove_atoms(theory, whole.paradox_atoms());
  const Closure healthy_closure = saturate(healthy, limits);

  std::vector<Clause> out;
  for (const Clause& c : minimal_members(healthy_closure)) {
    out.push_back(translate(c, healthy.universe(), theory.universe()));
  }
  whole.paradox_atoms().for_each([&](AtomId a) {
    out.push_back(Clause{Literal::pos(a)});
    out.push_back(Clause{Literal::neg(a)});
  });
  std::sort(out.begin(), out.end(), [](const Clause& a, const Clause& b) { return canonical_less(a, b); });
  return out;
}

bool component_claim_check(const Digraph& g, const SaturationLimits& limits) {
  const Closure closure = saturate(clausal_theory(g), limits);
  const auto components = underlying_components(g);
  std::vector<std::size_t> component_of(g.size());
  for (std::size_t k = 0; k < components.size(); ++k) {
    components[k].for_each([&](AtomId a) { component_of[a] = k; });
  }

  std::vector<std::vector<bool>> together(g.size(), std::vector<bool>(g.size(), false));
  for (const Clause& c : closure.clauses()) {
    const auto atoms = c.atoms(g.size()).members();
    for (AtomId a : atoms) {
      if (component_of[a] != component_of[atoms.front()]) return false;
      for (AtomId b : atoms) together[a][b] = true;
    }
  }
  for (AtomId a = 0; a < g.size(); ++a) {
    for (AtomId b = 0; b < g.size(); ++b) {
      if (a != b && component_of[a] == component_of[b] && !together[a][b]) return false;
    }
  }
  return true;
}

}  // namespace parakernel
