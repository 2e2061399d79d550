#include "parakernel/graph.hpp"

#include <algorithm>

#include "parakernel/error.hpp"

namespace parakernel {

bool is_valid_atom_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '\'';
  });
}

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_valid_atom_name(names_[i])) {
      throw Error(ErrorKind::Validation, "invalid atom name '" + names_[i] + "'");
    }
    index_.emplace(names_[i], static_cast<AtomId>(i));
  }
}

std::optional<AtomId> Universe::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AtomId Universe::at(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw Error(ErrorKind::UnknownAtom, "unknown atom '" + std::string(name) + "'");
}

AtomSet Universe::set_of(const std::vector<std::string>& names) const {
  AtomSet s(size());
  for (const auto& n : names) s.insert(at(n));
  return s;
}

std::vector<std::string> Universe::names_of(const AtomSet& s) const {
  if (s.universe_size() != size()) {
    throw Error(ErrorKind::Precondition, "atom set does not belong to this universe");
  }
  std::vector<std::string> out;
  s.for_each([&](AtomId a) { out.push_back(names_[a]); });
  return out;
}

Digraph::Digraph(Universe vertices, const std::vector<Edge>& edges)
    : universe_(std::move(vertices)),
      out_(universe_.size(), AtomSet(universe_.size())),
      in_(universe_.size(), AtomSet(universe_.size())) {
  for (auto [from, to] : edges) {
    if (from >= size() || to >= size()) {
      throw Error(ErrorKind::UnknownAtom, "edge endpoint outside the vertex set");
    }
    if (!out_[from].contains(to)) {
      out_[from].insert(to);
      in_[to].insert(from);
      ++edge_count_;
    }
  }
}

Digraph Digraph::from_names(std::vector<std::string> vertices,
                            const std::vector<std::pair<std::string, std::string>>& edges) {
  Universe u(std::move(vertices));
  std::vector<Edge> ids;
  ids.reserve(edges.size());
  for (const auto& [from, to] : edges) ids.emplace_back(u.at(from), u.at(to));
  return Digraph(std::move(u), ids);
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (AtomId x = 0; x < size(); ++x) {
    out_[x].for_each([&](AtomId y) { out.emplace_back(x, y); });
  }
  return out;
}

void Digraph::require_member_set(const AtomSet& s) const {
  if (s.universe_size() != size()) {
    throw Error(ErrorKind::Precondition, "atom set does not belong to the graph's vertex set");
  }
}

AtomSet Digraph::out(const AtomSet& s) const {
  require_member_set(s);
  AtomSet r(size());
  s.for_each([&](AtomId x) { r |= out_[x]; });
  return r;
}

AtomSet Digraph::in(const AtomSet& s) const {
  require_member_set(s);
  AtomSet r(size());
  s.for_each([&](AtomId x) { r |= in_[x]; });
  return r;
}

std::vector<std::string> GnfTheory::loose_atoms() const {
  std::set<std::string> loose;
  for (const auto& [x, ys] : formulas) {
    for (const auto& y : ys) {
      if (!formulas.contains(y)) loose.insert(y);
    }
  }
  return {loose.begin(), loose.end()};
}

Digraph theory_to_graph(const GnfTheory& theory) {
  if (auto loose = theory.loose_atoms(); !loose.empty()) {
    throw Error(ErrorKind::Validation,
                "atom '" + loose.front() + "' occurs negated but has no formula of its own");
  }
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [x, ys] : theory.formulas) {
    vertices.push_back(x);
    for (const auto& y : ys) edges.emplace_back(x, y);
  }
  return Digraph::from_names(std::move(vertices), edges);
}

GnfTheory graph_to_theory(const Digraph& g) {
  GnfTheory t;
  for (AtomId x = 0; x < g.size(); ++x) {
    auto& rhs = t.formulas[g.universe().name(x)];
    g.successors(x).for_each([&](AtomId y) { rhs.insert(g.universe().name(y)); });
  }
  return t;
}

Neighborhoods neighborhoods(const Digraph& g, const AtomSet& s) {
  AtomSet in = g.in(s);
  AtomSet closed = in | s;
  return {g.out(s), std::move(in), std::move(closed)};
}

AtomSet reachable(const Digraph& g, const AtomSet& s, Direction direction) {
  g.require_member_set(s);
  AtomSet seen = s;
  std::vector<AtomId> stack = s.members();
  while (!stack.empty()) {
    const AtomId x = stack.back();
    stack.pop_back();
    const AtomSet& next = direction == Direction::Forward ? g.successors(x) : g.predecessors(x);
    next.for_each([&](AtomId y) {
      if (!seen.contains(y)) {
        seen.insert(y);
        stack.push_back(y);
      }
    });
  }
  return seen;
}

bool is_inverse_closed(const Digraph& g, const AtomSet& s) {
  const AtomSet domain = g.in_closed(s);
  return g.in(domain).is_subset_of(domain);
}

Digraph induced_subgraph(const Digraph& g, const AtomSet& x) {
  g.require_member_set(x);
  Universe sub(g.names_of(x));
  std::vector<Edge> edges;
  x.for_each([&](AtomId from) {
    (g.successors(from) & x).for_each([&](AtomId to) {
      edges.emplace_back(sub.at(g.universe().name(from)), sub.at(g.universe().name(to)));
    });
  });
  return Digraph(std::move(sub), edges);
}

std::vector<AtomSet> underlying_components(const Digraph& g) {
  std::vector<AtomSet> components;
  AtomSet assigned(g.size());
  for (AtomId start = 0; start < g.size(); ++start) {
    if (assigned.contains(start)) continue;
    AtomSet component(g.size());
    component.insert(start);
    std::vector<AtomId> stack{start};
    while (!stack.empty()) {
      const AtomId x = stack.back();
      stack.pop_back();
      (g.successors(x) | g.predecessors(x)).for_each([&](AtomId y) {
        if (!component.contains(y)) {
          component.insert(y);
          stack.push_back(y);
        }
      });
    }
    assigned |= component;
    components.push_back(std::move(component));
  }
  return components;
}

GnfTheory complete_loose_atoms(const GnfTheory& theory) {
  const auto loose = theory.loose_atoms();
  if (loose.empty()) return theory;

  std::set<std::string> taken;
  for (const auto& [x, ys] : theory.formulas) {
    taken.insert(x);
    taken.insert(ys.begin(), ys.end());
  }
  GnfTheory out = theory;
  for (const auto& b : loose) {
    std::string fresh = b + "'";
    while (taken.contains(fresh)) fresh += "'";
    taken.insert(fresh);
    out.formulas[b] = {fresh};
    out.formulas[fresh] = {b};
  }
  return out;
}

}  // namespace parakernel
