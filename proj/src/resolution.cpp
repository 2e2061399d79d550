#include "parakernel/resolution.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace parakernel {

const char* to_string(Origin origin) noexcept {
  switch (origin) {
    case Origin::Input: return "input";
    case Origin::Axiom: return "axiom";
    case Origin::Resolvent: return "res";
  }
  return "?";
}

namespace {

// Clauses stored as two bitsets (positive atoms, negative atoms) laid out
// back to back in one arena, with an open-addressing index for dedup.
class ClauseArena {
 public:
  explicit ClauseArena(std::size_t atoms) : words_((atoms + 63) / 64), stride_(2 * words_) {
    if (stride_ == 0) stride_ = 2, words_ = 1;
    table_.assign(1024, kEmpty);
  }

  std::size_t size() const noexcept { return count_; }
  std::size_t words() const noexcept { return words_; }

  const std::uint64_t* pos(std::size_t i) const { return data_.data() + i * stride_; }
  const std::uint64_t* neg(std::size_t i) const { return data_.data() + i * stride_ + words_; }

  // Returns the index of `mask` (2 * words() entries), inserting it if new.
  std::pair<std::size_t, bool> intern(const std::uint64_t* mask) {
    if ((count_ + 1) * 2 > table_.size()) grow();
    std::size_t slot = hash(mask) & (table_.size() - 1);
    while (table_[slot] != kEmpty) {
      if (std::equal(mask, mask + stride_, data_.data() + table_[slot] * stride_)) {
        return {table_[slot], false};
      }
      slot = (slot + 1) & (table_.size() - 1);
    }
    table_[slot] = count_;
    data_.insert(data_.end(), mask, mask + stride_);
    return {count_++, true};
  }

  void encode(const Clause& c, std::vector<std::uint64_t>& mask) const {
    mask.assign(stride_, 0);
    for (const Literal& l : c.literals()) {
      mask[(l.negated ? words_ : 0) + l.atom / 64] |= std::uint64_t{1} << (l.atom % 64);
    }
  }

  Clause decode(std::size_t i) const {
    std::vector<Literal> lits;
    const std::uint64_t* p = pos(i);
    const std::uint64_t* n = neg(i);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t any = p[w] | n[w];
      while (any != 0) {
        const int bit = std::countr_zero(any);
        any &= any - 1;
        const auto atom = static_cast<AtomId>(w * 64 + static_cast<std::size_t>(bit));
        if ((p[w] >> bit) & 1u) lits.push_back(Literal::pos(atom));
        if ((n[w] >> bit) & 1u) lits.push_back(Literal::neg(atom));
      }
    }
    return Clause(std::move(lits));
  }

 private:
  static constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);

  std::size_t hash(const std::uint64_t* mask) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::size_t k = 0; k < stride_; ++k) {
      h ^= mask[k] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }

  void grow() {
    std::vector<std::size_t> bigger(table_.size() * 2, kEmpty);
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t slot = hash(data_.data() + i * stride_) & (bigger.size() - 1);
      while (bigger[slot] != kEmpty) slot = (slot + 1) & (bigger.size() - 1);
      bigger[slot] = i;
    }
    table_.swap(bigger);
  }

  std::size_t words_;
  std::size_t stride_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> data_;
  std::vector<std::size_t> table_;
};

// Smallest derivable B ⊆ c accepted by `accept`, in canonical order.
// Enumerates subsets when that is cheaper than scanning the closure.
std::optional<Clause> smallest_derivable_subset(const Closure& closure, const Clause& c,
                                                bool allow_empty,
                                                const std::function<bool(const Clause&)>& accept) {
  const std::size_t k = c.size();
  const bool enumerate = k < 24 && (std::size_t{1} << k) <= closure.size();
  if (!enumerate) {
    std::optional<Clause> best;
    for (const Clause& d : closure.clauses()) {
      if (d.empty() && !allow_empty) continue;
      if (!d.is_subset_of(c) || !accept(d)) continue;
      if (!best || canonical_less(d, *best)) best = d;
    }
    return best;
  }
  const auto& lits = c.literals();
  std::vector<std::size_t> pick;
  for (std::size_t size = allow_empty ? 0 : 1; size <= k; ++size) {
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<Literal> sub;
      sub.reserve(size);
      for (std::size_t i : pick) sub.push_back(lits[i]);
      Clause candidate(std::move(sub));
      if (closure.contains(candidate) && accept(candidate)) return candidate;
      // next combination in lexicographic order
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == k - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

void require_in_universe(const Closure& closure, const Clause& c) {
  if (c.atom_bound() > closure.universe().size()) {
    throw Error(ErrorKind::UnknownAtom, "clause mentions an atom outside the closure's universe");
  }
}

bool always(const Clause&) { return true; }

}  // namespace

std::optional<std::size_t> Closure::index_of(const Clause& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Closure saturate_wide(const ClausalTheory& theory, const SaturationLimits& limits) {
  const std::size_t n = theory.universe().size();
  ClauseArena arena(n);
  std::vector<Derivation> derivations;
  const std::size_t words = arena.words();

  auto check_cap = [&] {
    if (arena.size() > limits.max_clauses) {
      throw Error(ErrorKind::Resource, "closure exceeds the cap of " +
                                           std::to_string(limits.max_clauses) + " clauses");
    }
  };

  std::vector<std::uint64_t> mask;
  for (const Clause& c : theory.clauses()) {
    arena.encode(c, mask);
    if (arena.intern(mask.data()).second) derivations.push_back({Origin::Input, 0, 0, 0});
  }
  for (AtomId x = 0; x < n; ++x) {
    arena.encode(Clause{Literal::pos(x), Literal::neg(x)}, mask);
    if (arena.intern(mask.data()).second) derivations.push_back({Origin::Axiom, 0, 0, 0});
  }
  check_cap();

  // occurrences[2a] lists processed clauses containing a, [2a+1] those with ¬a
  std::vector<std::vector<std::size_t>> occurrences(2 * n);
  std::vector<std::uint64_t> given(2 * words);
  std::vector<std::uint64_t> resolvent(2 * words);

  auto add = [&](std::size_t positive, std::size_t negative, AtomId pivot) {
    const std::uint64_t* pp = arena.pos(positive);
    const std::uint64_t* pn = arena.neg(positive);
    const std::uint64_t* np = arena.pos(negative);
    const std::uint64_t* nn = arena.neg(negative);
    const std::size_t pw = pivot / 64;
    const std::uint64_t pbit = std::uint64_t{1} << (pivot % 64);
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t clear = w == pw ? ~pbit : ~std::uint64_t{0};
      resolvent[w] = (pp[w] & clear) | np[w];
      resolvent[words + w] = pn[w] | (nn[w] & clear);
    }
    if (arena.intern(resolvent.data()).second) {
      derivations.push_back({Origin::Resolvent, positive, negative, pivot});
      check_cap();
    }
  };

  for (std::size_t i = 0; i < arena.size(); ++i) {
    std::copy(arena.pos(i), arena.pos(i) + 2 * words, given.begin());
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = given[w]; bits != 0; bits &= bits - 1) {
        const auto a = static_cast<AtomId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        for (std::size_t j : occurrences[2 * a + 1]) add(i, j, a);
      }
      for (std::uint64_t bits = given[words + w]; bits != 0; bits &= bits - 1) {
        const auto a = static_cast<AtomId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        for (std::size_t j : occurrences[2 * a]) add(j, i, a);
      }
    }
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = given[w]; bits != 0; bits &= bits - 1) {
        occurrences[2 * (w * 64 + static_cast<std::size_t>(std::countr_zero(bits)))].push_back(i);
      }
      for (std::uint64_t bits = given[words + w]; bits != 0; bits &= bits - 1) {
        occurrences[2 * (w * 64 + static_cast<std::size_t>(std::countr_zero(bits))) + 1].push_back(i);
      }
    }
  }

  Closure closure;
  closure.universe_ = theory.universe();
  closure.clauses_.reserve(arena.size());
  closure.index_.reserve(arena.size());
  for (std::size_t i = 0; i < arena.size(); ++i) {
    closure.clauses_.push_back(arena.decode(i));
    closure.index_.emplace(closure.clauses_.back(), i);
  }
  closure.derivations_ = std::move(derivations);
  return closure;
}

namespace {

// Universes of at most 32 atoms: a clause is one word, bit 2a for a and
// 2a+1 for ~a. Up to 12 atoms dedup uses a dense bitmap over all 4^n
// literal sets, beyond that a linear-probing table.
class WordSet {
 public:
  explicit WordSet(std::size_t atoms) {
    if (atoms <= 12) {
      dense_.assign((std::size_t{1} << (2 * atoms)) / 64 + 1, 0);
    } else {
      table_.assign(1024, kEmpty);
    }
  }

  // true if `w` was not present before
  bool insert(std::uint64_t w) {
    if (!dense_.empty()) {
      std::uint64_t& cell = dense_[w >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (w & 63);
      if (cell & bit) return false;
      cell |= bit;
      return true;
    }
    if ((count_ + 1) * 2 > table_.size()) grow();
    std::size_t slot = mix(w) & (table_.size() - 1);
    while (table_[slot] != kEmpty) {
      if (table_[slot] == w) return false;
      slot = (slot + 1) & (table_.size() - 1);
    }
    table_[slot] = w;
    ++count_;
    return true;
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};  // bits 62, 63 are unused

  static std::size_t mix(std::uint64_t w) {
    w ^= w >> 33;
    w *= 0xff51afd7ed558ccdull;
    w ^= w >> 33;
    return static_cast<std::size_t>(w);
  }

  void grow() {
    std::vector<std::uint64_t> old(table_.size() * 2, kEmpty);
    old.swap(table_);
    for (std::uint64_t w : old) {
      if (w == kEmpty) continue;
      std::size_t slot = mix(w) & (table_.size() - 1);
      while (table_[slot] != kEmpty) slot = (slot + 1) & (table_.size() - 1);
      table_[slot] = w;
    }
  }

  std::vector<std::uint64_t> dense_;
  std::vector<std::uint64_t> table_;
  std::size_t count_ = 0;
};

std::uint64_t word_of(const Clause& c) {
  std::uint64_t w = 0;
  for (const Literal& l : c.literals()) w |= std::uint64_t{1} << (2 * l.atom + (l.negated ? 1 : 0));
  return w;
}

Clause clause_of_word(std::uint64_t w) {
  std::vector<Literal> lits;
  for (; w != 0; w &= w - 1) {
    const auto bit = static_cast<AtomId>(std::countr_zero(w));
    lits.push_back({bit / 2, (bit & 1) != 0});
  }
  return Clause(std::move(lits));
}

}  // namespace

Closure saturate(const ClausalTheory& theory, const SaturationLimits& limits) {
  const std::size_t n = theory.universe().size();
  if (n > 31) return saturate_wide(theory, limits);

  std::vector<std::uint64_t> words;
  std::vector<Derivation> derivations;
  WordSet seen(n);
  auto check_cap = [&] {
    if (words.size() > limits.max_clauses) {
      throw Error(ErrorKind::Resource, "closure exceeds the cap of " +
                                           std::to_string(limits.max_clauses) + " clauses");
    }
  };
  auto added = [&](std::uint64_t w, Derivation d) {
    words.push_back(w);
    derivations.push_back(d);
    check_cap();
  };
  auto push = [&](std::uint64_t w, Derivation d) {
    if (seen.insert(w)) added(w, d);
  };

  for (const Clause& c : theory.clauses()) push(word_of(c), {Origin::Input, 0, 0, 0});
  for (AtomId x = 0; x < n; ++x) push(std::uint64_t{3} << (2 * x), {Origin::Axiom, 0, 0, 0});
  // once every literal set is present nothing new can appear
  const std::size_t everything = std::size_t{1} << (2 * n);

  // occurrences[k] lists processed clauses containing literal bit k
  std::vector<std::vector<std::uint32_t>> occurrences(2 * n);
  // given clauses are taken shortest first; queue[s] holds unprocessed
  // clauses with s literals from head[s] on
  std::vector<std::vector<std::uint32_t>> queue(2 * n + 1);
  std::vector<std::size_t> head(2 * n + 1, 0);
  std::size_t queued = 0;
  auto enqueue_new = [&] {
    for (; queued < words.size(); ++queued) {
      queue[static_cast<std::size_t>(std::popcount(words[queued]))].push_back(static_cast<std::uint32_t>(queued));
    }
  };
  auto next_given = [&]() -> std::optional<std::size_t> {
    enqueue_new();
    for (std::size_t s = 0; s < queue.size(); ++s) {
      if (head[s] < queue[s].size()) return queue[s][head[s]++];
    }
    return std::nullopt;
  };
  while (words.size() < everything) {
    const auto next = next_given();
    if (!next) break;
    const std::size_t i = *next;
    const std::uint64_t given = words[i];
    for (std::uint64_t bits = given; bits != 0; bits &= bits - 1) {
      const auto k = static_cast<unsigned>(std::countr_zero(bits));
      const AtomId a = k / 2;
      const std::uint64_t pos_bit = std::uint64_t{1} << (2 * a);
      const std::uint64_t neg_bit = pos_bit << 1;
      if ((k & 1) == 0) {
        const std::uint64_t base = given & ~pos_bit;
        for (std::uint32_t j : occurrences[k + 1]) {
          const std::uint64_t r = base | (words[j] & ~neg_bit);
          if (seen.insert(r)) added(r, {Origin::Resolvent, i, j, a});
        }
      } else {
        const std::uint64_t base = given & ~neg_bit;
        for (std::uint32_t j : occurrences[k - 1]) {
          const std::uint64_t r = (words[j] & ~pos_bit) | base;
          if (seen.insert(r)) added(r, {Origin::Resolvent, j, i, a});
        }
      }
    }
    for (std::uint64_t bits = given; bits != 0; bits &= bits - 1) {
      occurrences[static_cast<std::size_t>(std::countr_zero(bits))].push_back(static_cast<std::uint32_t>(i));
    }
  }

  Closure closure;
  closure.universe_ = theory.universe();
  closure.clauses_.reserve(words.size());
  closure.index_.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    closure.clauses_.push_back(clause_of_word(words[i]));
    closure.index_.emplace(closure.clauses_.back(), i);
  }
  closure.derivations_ = std::move(derivations);
  return closure;
}

bool derives(const Closure& closure, const Clause& clause) {
  require_in_universe(closure, clause);
  return closure.contains(clause);
}

std::optional<Clause> witness_subclause(const Closure& closure, const Clause& clause) {
  require_in_universe(closure, clause);
  return smallest_derivable_subset(closure, clause, true, always);
}

AtomSet paradoxical_atoms(const Closure& closure) {
  AtomSet out(closure.universe().size());
  for (AtomId x = 0; x < closure.universe().size(); ++x) {
    if (closure.contains(Clause{Literal::pos(x)}) && closure.contains(Clause{Literal::neg(x)})) {
      out.insert(x);
    }
  }
  if (out.empty() == closure.has_empty_clause()) {
    throw_internal("empty clause derivable iff some atom is paradoxical");
  }
  return out;
}

SubdiscourseReport consistent_subtheory(const ClausalTheory& theory, const Digraph* graph,
                                        const SaturationLimits& limits) {
  return consistent_subtheory(theory, saturate(theory, limits), graph, limits);
}

SubdiscourseReport consistent_subtheory(const ClausalTheory& theory, const Closure& closure,
                                        const Digraph* graph, const SaturationLimits& limits) {
  if (graph != nullptr && !(clausal_theory(*graph) == theory)) {
    throw Error(ErrorKind::Precondition, "theory is not the clausal theory of the given graph");
  }
  if (!(closure.universe() == theory.universe())) {
    throw Error(ErrorKind::Precondition, "closure was computed over another universe");
  }
  SubdiscourseReport r;
  r.paradox_atoms = paradoxical_atoms(closure);
  r.healthy_atoms = r.paradox_atoms.complement();
  r.theory = remove_atoms(theory, r.paradox_atoms);
  if (saturate(r.theory, limits).has_empty_clause()) {
    throw_internal("the consistent subtheory derives the empty clause");
  }
  if (graph != nullptr) {
    AtomSet border(graph->size());
    r.healthy_atoms.for_each([&](AtomId x) {
      if (!graph->successors(x).is_subset_of(r.healthy_atoms)) border.insert(x);
    });
    r.border = std::move(border);
  }
  return r;
}

std::vector<TwoPartition> cmod_okk(const SubdiscourseReport& report, const Digraph& g,
                                   const EnumerationLimits& limits) {
  g.require_member_set(report.healthy_atoms);
  const Digraph healthy = induced_subgraph(g, report.healthy_atoms);
  const AtomSet border = report.border.value_or(AtomSet(g.size()));

  auto lift = [&](const AtomSet& sub) {
    AtomSet out(g.size());
    sub.for_each([&](AtomId a) { out.insert(g.universe().at(healthy.universe().name(a))); });
    return out;
  };

  std::vector<TwoPartition> out;
  for (const AtomSet& kernel : enumerate_kernels(healthy, limits)) {
    AtomSet false_set = lift(healthy.in(kernel));
    if (!border.is_subset_of(false_set)) continue;
    out.push_back({lift(kernel), std::move(false_set)});
  }
  return out;
}

Reasoner::Reasoner(const ClausalTheory& theory, const SaturationLimits& limits)
    : theory_(theory), closure_(saturate(theory, limits)), paradox_(paradoxical_atoms(closure_)) {}

ParaWitness Reasoner::explain(const Clause& a) const {
  require_in_universe(closure_, a);
  if (a.empty()) {
    if (paradox_.empty()) return {};
    return {true, WitnessKind::AllParadox, std::nullopt};
  }
  const Clause healthy = a.without_atoms(paradox_);
  if (healthy.empty()) return {true, WitnessKind::AllParadox, std::nullopt};
  if (auto b = smallest_derivable_subset(closure_, healthy, false, always)) {
    return {true, WitnessKind::HealthySubclause, std::move(b)};
  }
  return {};
}

bool Reasoner::provable(const Clause& c, Weakening mode) const {
  require_in_universe(closure_, c);
  switch (mode) {
    case Weakening::None:
      return closure_.contains(c);
    case Weakening::Cw:
      return smallest_derivable_subset(closure_, c, true, always).has_value();
    case Weakening::AwBw: {
      if (closure_.contains(c)) return true;
      // (bW): every atom provably paradoxical
      if (!c.empty() && c.atoms(theory_.universe().size()).is_subset_of(paradox_)) return true;
      // (aW): weaken a derivable premise that is not wholly paradoxical
      auto not_wholly_paradoxical = [&](const Clause& b) {
        return !b.atoms(theory_.universe().size()).is_subset_of(paradox_);
      };
      return smallest_derivable_subset(closure_, c, false, not_wholly_paradoxical).has_value();
    }
  }
  return false;
}

bool entails_para(const ClausalTheory& theory, const Clause& a, const SaturationLimits& limits) {
  theory.require_clause(a);
  return Reasoner(theory, limits).entails(a);
}

bool provable_weakened(const ClausalTheory& theory, const Clause& c, Weakening mode,
                       const SaturationLimits& limits) {
  theory.require_clause(c);
  return Reasoner(theory, limits).provable(c, mode);
}

Closure closure_with_assumptions(const ClausalTheory& theory, const Clause& a,
                                 const SaturationLimits& limits) {
  theory.require_clause(a);
  return saturate(theory.with_clauses(complement_units(a)), limits);
}

Proof proof_of(const Closure& closure, const Clause& clause) {
  require_in_universe(closure, clause);
  const auto root = closure.index_of(clause);
  if (!root) throw Error(ErrorKind::Precondition, "clause is not derivable");

  Proof proof;
  proof.conclusion = clause;
  std::unordered_map<std::size_t, std::size_t> step_of;
  // explicit post-order walk; premises are emitted before their resolvent
  std::vector<std::pair<std::size_t, bool>> stack{{*root, false}};
  while (!stack.empty()) {
    auto [node, expanded] = stack.back();
    stack.pop_back();
    if (step_of.contains(node)) continue;
    const Derivation& d = closure.derivation(node);
    if (d.origin == Origin::Resolvent && !expanded) {
      stack.push_back({node, true});
      stack.push_back({d.negative_premise, false});
      stack.push_back({d.positive_premise, false});
      continue;
    }
    ProofStep step{closure.clauses()[node], d.origin, 0, 0, d.pivot};
    if (d.origin == Origin::Resolvent) {
      step.positive_premise = step_of.at(d.positive_premise);
      step.negative_premise = step_of.at(d.negative_premise);
    } else {
      step.pivot = 0;
    }
    step_of.emplace(node, proof.steps.size());
    proof.steps.push_back(std::move(step));
  }
  return proof;
}

bool replay(const Proof& proof, const ClausalTheory& theory) {
  const std::size_t n = theory.universe().size();
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    if (s.clause.atom_bound() > n) return false;
    switch (s.origin) {
      case Origin::Input:
        if (!theory.contains(s.clause)) return false;
        break;
      case Origin::Axiom: {
        const auto& l = s.clause.literals();
        if (l.size() != 2 || l[0].atom != l[1].atom) return false;
        break;
      }
      case Origin::Resolvent: {
        if (s.positive_premise >= i || s.negative_premise >= i) return false;
        const Clause& p = proof.steps[s.positive_premise].clause;
        const Clause& q = proof.steps[s.negative_premise].clause;
        if (!p.contains(Literal::pos(s.pivot)) || !q.contains(Literal::neg(s.pivot))) return false;
        std::vector<Literal> lits;
        for (const Literal& l : p.literals()) {
          if (l != Literal::pos(s.pivot)) lits.push_back(l);
        }
        for (const Literal& l : q.literals()) {
          if (l != Literal::neg(s.pivot)) lits.push_back(l);
        }
        if (!(Clause(std::move(lits)) == s.clause)) return false;
        break;
      }
    }
  }
  return !proof.steps.empty() && proof.steps.back().clause == proof.conclusion;
}

}  // namespace parakernel
