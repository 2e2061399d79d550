#include "parakernel/kernels.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace parakernel {

namespace {

void require_within_cap(const Digraph& g, const EnumerationLimits& limits) {
  if (g.size() > limits.max_atoms) {
    throw Error(ErrorKind::Resource, "subset enumeration over " + std::to_string(g.size()) +
                                         " atoms exceeds the cap of " +
                                         std::to_string(limits.max_atoms));
  }
}

// Calls visit(S) for every independent S, growing sets in index order and
// pruning as soon as a vertex conflicts with the chosen ones.
void for_each_independent(const Digraph& g, const std::function<void(const AtomSet&)>& visit) {
  const std::size_t n = g.size();
  AtomSet chosen(n);
  AtomSet blocked(n);
  for (AtomId x = 0; x < n; ++x) {
    if (g.has_edge(x, x)) blocked.insert(x);
  }

  std::function<void(AtomId, const AtomSet&)> extend = [&](AtomId next, const AtomSet& block) {
    visit(chosen);
    for (AtomId x = next; x < n; ++x) {
      if (block.contains(x)) continue;
      chosen.insert(x);
      AtomSet deeper = block | g.successors(x) | g.predecessors(x);
      extend(x + 1, deeper);
      chosen.erase(x);
    }
  };
  extend(0, blocked);
}

std::vector<AtomSet> collect(const Digraph& g, const EnumerationLimits& limits,
                             const std::function<bool(const AtomSet&)>& keep) {
  require_within_cap(g, limits);
  std::vector<AtomSet> out;
  for_each_independent(g, [&](const AtomSet& s) {
    if (keep(s)) out.push_back(s);
  });
  sort_canonical(out);
  return out;
}

}  // namespace

bool is_independent(const Digraph& g, const AtomSet& s) { return !g.out(s).intersects(s); }

bool is_kernel(const Digraph& g, const AtomSet& s) {
  return is_independent(g, s) && g.in(s) == s.complement();
}

bool is_semikernel(const Digraph& g, const AtomSet& s) {
  const AtomSet in = g.in(s);
  return g.out(s).is_subset_of(in) && !in.intersects(s);
}

SubsetReport classify_subset(const Digraph& g, const AtomSet& s) {
  SubsetReport r;
  r.independent = is_independent(g, s);
  r.kernel = is_kernel(g, s);
  r.semikernel = is_semikernel(g, s);
  r.inverse_closed = is_inverse_closed(g, s);
  r.psk = r.semikernel && r.inverse_closed;
  return r;
}

Partition3 partition_of(const Digraph& g, const AtomSet& s) {
  if (!is_independent(g, s)) {
    throw Error(ErrorKind::Precondition, "partition_of needs an independent set");
  }
  AtomSet false_set = g.in(s);
  AtomSet paradox = (s | false_set).complement();
  return {s, std::move(false_set), std::move(paradox)};
}

bool is_psk_partition(const Digraph& g, const Partition3& p) {
  g.require_member_set(p.true_set);
  if (!is_semikernel(g, p.true_set) || !is_inverse_closed(g, p.true_set)) return false;
  return partition_of(g, p.true_set) == p;
}

std::vector<AtomSet> enumerate_kernels(const Digraph& g, const EnumerationLimits& limits) {
  return collect(g, limits, [&](const AtomSet& s) { return g.in(s) == s.complement(); });
}

std::vector<AtomSet> enumerate_semikernels(const Digraph& g, const EnumerationLimits& limits) {
  return collect(g, limits, [&](const AtomSet& s) { return g.out(s).is_subset_of(g.in(s)); });
}

std::vector<AtomSet> enumerate_closed_semikernels(const Digraph& g,
                                                  const EnumerationLimits& limits) {
  return collect(g, limits, [&](const AtomSet& s) {
    return g.out(s).is_subset_of(g.in(s)) && is_inverse_closed(g, s);
  });
}

std::vector<Partition3> models(const Digraph& g, const EnumerationLimits& limits) {
  const auto closed = enumerate_closed_semikernels(g, limits);
  std::vector<AtomSet> domains;
  domains.reserve(closed.size());
  for (const auto& s : closed) domains.push_back(g.in_closed(s));

  std::vector<Partition3> out;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    const bool dominated = std::any_of(domains.begin(), domains.end(), [&](const AtomSet& d) {
      return domains[i].is_proper_subset_of(d);
    });
    if (!dominated) out.push_back(partition_of(g, closed[i]));
  }
  if (out.empty()) throw_internal("a graph without models");
  return out;
}

AtomSet sk_intersect_reach(const Digraph& g, const AtomSet& s, const AtomSet& t) {
  g.require_member_set(s);
  g.require_member_set(t);
  if (!t.is_subset_of(s)) throw Error(ErrorKind::Precondition, "T must be a subset of S");
  if (!is_semikernel(g, s)) throw Error(ErrorKind::Precondition, "S must be a semikernel");
  AtomSet r = s & reachable(g, t, Direction::Forward);
  if (!is_semikernel(g, r)) throw_internal("S ∩ E*(T) is not a semikernel");
  return r;
}

AtomSet sk_union(const Digraph& g, const AtomSet& s, const AtomSet& t) {
  g.require_member_set(s);
  g.require_member_set(t);
  if (!is_semikernel(g, s) || !is_semikernel(g, t)) {
    throw Error(ErrorKind::Precondition, "S and T must be semikernels");
  }
  if (g.in(s).intersects(t)) {
    throw Error(ErrorKind::Precondition, "T meets the in-neighbourhood of S");
  }
  AtomSet r = s | t;
  if (!is_semikernel(g, r)) throw_internal("S ∪ T is not a semikernel");
  return r;
}

Partition3 combine_psk(const Digraph& g, const Partition3& alpha, const Partition3& beta) {
  using Reason = CombineError::Reason;
  if (!is_psk_partition(g, alpha)) {
    throw CombineError(Reason::AlphaNotPsk, "alpha is not the partition of a closed semikernel");
  }
  g.require_member_set(beta.true_set);
  if (!beta.boolean_domain().intersects(alpha.paradox_set)) {
    throw CombineError(Reason::NoOverlap,
                       "beta assigns no boolean value outside alpha's boolean domain");
  }
  if (!is_psk_partition(g, beta)) {
    throw CombineError(Reason::BetaNotPsk, "beta is not the partition of a closed semikernel");
  }

  const AtomSet extension = beta.true_set & alpha.paradox_set;
  Partition3 gamma = partition_of(g, alpha.true_set | extension);
  if (!is_psk_partition(g, gamma)) throw_internal("combined partition is not pSK");
  if (!alpha.boolean_domain().is_proper_subset_of(gamma.boolean_domain())) {
    throw_internal("combined partition does not extend alpha");
  }
  return gamma;
}

}  // namespace parakernel
