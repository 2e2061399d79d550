// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "parakernel/consequence.hpp"
#include "parakernel/resolution.hpp"
#include "support.hpp"

using namespace parakernel;
using namespace pktest;

namespace {

constexpr double kOurGrSeconds = 1.0;
constexpr double kOracleSuiteSeconds = 120.0;
constexpr std::size_t kClausesPerGraph = 50;
constexpr std::size_t kCombinatorInstances = 500;
constexpr std::size_t kSoundnessInstances = 1000;
constexpr std::size_t kRandomTheories = 400;

struct Check {
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

int failed_criteria = 0;

void report(int id, const std::string& title, const Check& c, const std::string& detail = {}) {
  const bool ok = c.failures == 0;
  if (!ok) ++failed_criteria;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  if (!ok) std::cout << " -- " << c.failures << " violation(s), first: " << c.first;
  std::cout << std::endl;
}

template <typename F>
void criterion(int id, const std::string& title, F&& body) {
  Check c;
  std::string detail;
  try {
    detail = body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  report(id, title, c, detail);
}

Clause lits(const Universe& u, const std::string& text) { return io::parse_clause(text, u); }

std::vector<Clause> units(const Closure& closure) {
  std::vector<Clause> out;
  for (const Clause& c : closure.clauses()) {
    if (c.size() == 1) out.push_back(c);
  }
  return sorted_clauses(out);
}

std::vector<Clause> parse_all(const Universe& u, std::initializer_list<const char*> texts) {
  std::vector<Clause> out;
  for (const char* t : texts) out.push_back(lits(u, t));
  return sorted_clauses(out);
}

int run_cli(const std::string& args) {
  const std::string command = std::string("\"") + PK_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<Partition3> sorted_partitions(std::vector<Partition3> ps) {
  std::sort(ps.begin(), ps.end(), partition_less);
  return ps;
}

}  // namespace

int main() {
  std::cout << "parakernel acceptance suite" << std::endl;

  criterion(1, "worked example: paradox, subdiscourse, models, unit closure", [](Check& c) {
    const auto start = Clock::now();
    const Digraph g = fixture_graph("delta.gnf");
    const Universe& u = g.universe();
    const ClausalTheory t = clausal_theory(g);
    const Closure closure = saturate(t);

    c.expect(paradoxical_atoms(closure) == u.set_of({"c", "d", "e"}), "paradox set");
    const auto report = consistent_subtheory(t, closure, &g);
    const Universe& healthy = report.theory.universe();
    c.expect(report.theory.clauses() == parse_all(healthy, {"a a'", "~a ~a'", "b a", "~b ~a", "~b"}),
             "subdiscourse theory");
    c.expect(report.border && *report.border == u.set_of({"b"}), "border");
    const std::vector<Partition3> expected = {
        {u.set_of({"a"}), u.set_of({"a'", "b"}), u.set_of({"c", "d", "e"})}};
    c.expect(models(g) == expected, "models");
    c.expect(units(closure) == parse_all(u, {"a", "~a'", "~b", "c", "~c", "d", "~d", "e", "~e"}),
             "unit clauses");
    const double secs = seconds_since(start);
    c.expect(secs < kOurGrSeconds, "runtime " + std::to_string(secs) + " s");
    return "runtime " + std::to_string(secs) + " s, limit " + std::to_string(kOurGrSeconds) + " s";
  });

  criterion(2, "small fixtures: kernels, semikernels, models, closure", [](Check& c) {
    const Digraph f1 = fixture_graph("f1.gnf");
    c.expect(enumerate_kernels(f1) == std::vector<AtomSet>{f1.set_of({"s"})}, "Ker(F1)");

    const Digraph f2 = fixture_graph("f2.gnf");
    std::vector<AtomSet> nonempty;
    for (const auto& s : enumerate_semikernels(f2)) {
      if (!s.empty()) nonempty.push_back(s);
    }
    c.expect(nonempty == std::vector<AtomSet>{f2.set_of({"s"})}, "nonempty SK(F2)");
    const std::vector<Partition3> mod_f2 = {{f2.universe().empty_set(), f2.universe().empty_set(),
                                             f2.set_of({"f", "y", "s"})}};
    c.expect(models(f2) == mod_f2, "Mod(F2)");

    const auto gamma2 = io::parse_clause_set(read_fixture("gamma2.cls"));
    const Closure closure = saturate(gamma2);
    const Universe& u = gamma2.universe();
    c.expect(closure.has_empty_clause(), "closure of Gamma2 lacks []");
    for (const char* l : {"f", "~f", "y", "~y", "s", "~s"}) {
      c.expect(closure.contains(lits(u, l)), std::string("closure lacks ") + l);
    }
    return std::string{};
  });

  const auto& graphs = corpus();

  criterion(3, "engine and oracle agree on the random corpus", [&](Check& c) {
    const auto start = Clock::now();
    for (const auto& [spec, g] : graphs) {
      const auto tag = describe(spec);
      const auto kernels = enumerate_kernels(g);
      c.expect(kernels == oracle::brute_kernels(g), "kernels " + tag);
      c.expect(enumerate_semikernels(g) == oracle::brute_semikernels(g), "semikernels " + tag);
      c.expect(models(g) == oracle::brute_models(g), "models " + tag);
      c.expect(kernels == oracle::truth_table_models(clausal_theory(g)), "classical models " + tag);
    }
    const double secs = seconds_since(start);
    c.expect(secs < kOracleSuiteSeconds, "runtime " + std::to_string(secs) + " s");
    return std::to_string(graphs.size()) + " graphs, " + std::to_string(secs) + " s, limit " +
           std::to_string(kOracleSuiteSeconds) + " s";
  });

  // Saturation is shared by the remaining corpus criteria.
  std::vector<std::unique_ptr<Reasoner>> reasoners;
  std::vector<std::vector<Partition3>> corpus_models;
  for (const auto& entry : graphs) {
    reasoners.push_back(std::make_unique<Reasoner>(clausal_theory(entry.graph)));
    corpus_models.push_back(models(entry.graph));
  }

  criterion(4, "all models share one boolean domain", [&](Check& c) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto& ms = corpus_models[i];
      for (const auto& m : ms) {
        c.expect(m.boolean_domain() == ms.front().boolean_domain(), describe(graphs[i].spec));
      }
    }
    return std::string{};
  });

  criterion(5, "model paradox sets equal the provably paradoxical atoms", [&](Check& c) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (const auto& m : corpus_models[i]) {
        c.expect(m.paradox_set == reasoners[i]->paradox_atoms(), describe(graphs[i].spec));
      }
    }
    return std::string{};
  });

  criterion(6, "classical models of the subdiscourse extended by the paradox set are the models", [&](Check& c) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Digraph& g = graphs[i].graph;
      const auto report = consistent_subtheory(reasoners[i]->theory(), reasoners[i]->closure(), &g);
      std::vector<Partition3> lifted;
      for (const auto& tp : cmod_okk(report, g)) {
        lifted.push_back({tp.true_set, tp.false_set, report.paradox_atoms});
      }
      c.expect(sorted_partitions(lifted) == sorted_partitions(corpus_models[i]), describe(graphs[i].spec));
    }
    return std::string{};
  });

  criterion(7, "syntactic, semantic and aW/bW entailment coincide", [&](Check& c) {
    std::mt19937_64 rng(7);
    std::size_t checked = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Digraph& g = graphs[i].graph;
      for (std::size_t k = 0; k < kClausesPerGraph; ++k) {
        const Clause cl = random_clause(rng, g.size(), 4);
        const bool para = reasoners[i]->entails(cl);
        const bool sem = entails_semantic(corpus_models[i], cl).holds;
        const bool weak = reasoners[i]->provable(cl, Weakening::AwBw);
        c.expect(para == sem && sem == weak,
                 describe(graphs[i].spec) + " clause " + to_string(cl, g.universe()));
        ++checked;
      }
    }
    return std::to_string(checked) + " clauses";
  });

  criterion(8, "consistent graphs: models are kernels, entailment is classical", [&](Check& c) {
    std::mt19937_64 rng(8);
    std::size_t consistent = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (!reasoners[i]->paradox_atoms().empty()) continue;
      ++consistent;
      const Digraph& g = graphs[i].graph;
      std::vector<AtomSet> trues;
      for (const auto& m : corpus_models[i]) {
        c.expect(m.paradox_set.empty(), "paradox in consistent " + describe(graphs[i].spec));
        trues.push_back(m.true_set);
      }
      c.expect(trues == enumerate_kernels(g), "models vs kernels " + describe(graphs[i].spec));
      for (std::size_t k = 0; k < kClausesPerGraph; ++k) {
        const Clause cl = random_clause(rng, g.size(), 4);
        c.expect(reasoners[i]->entails(cl) == classical_entails(reasoners[i]->theory(), cl),
                 describe(graphs[i].spec) + " clause " + to_string(cl, g.universe()));
      }
    }
    return std::to_string(consistent) + " consistent graphs";
  });

  criterion(9, "semikernel combinators, resolution closure laws and soundness", [&](Check& c) {
    std::mt19937_64 rng(9);
    std::ostringstream detail;

    // Semikernel combinators.
    std::size_t meets = 0, unions = 0;
    for (std::size_t attempts = 0; (meets < kCombinatorInstances || unions < kCombinatorInstances) &&
                                   attempts < 200 * kCombinatorInstances;
         ++attempts) {
      const Digraph& g = graphs[rng() % graphs.size()].graph;
      const auto sks = oracle::brute_semikernels(g);
      const AtomSet& s = sks[rng() % sks.size()];
      const AtomSet& t = sks[rng() % sks.size()];
      if (meets < kCombinatorInstances) {
        AtomSet sub = g.universe().empty_set();
        s.for_each([&](AtomId a) {
          if (rng() & 1) sub.insert(a);
        });
        const AtomSet r = sk_intersect_reach(g, s, sub);
        c.expect(r == (s & reachable(g, sub, Direction::Forward)), "S meet E*(T) value");
        c.expect(std::find(sks.begin(), sks.end(), r) != sks.end(), "S meet E*(T) not a semikernel");
        ++meets;
      }
      if (unions < kCombinatorInstances && !g.in(s).intersects(t)) {
        const AtomSet r = sk_union(g, s, t);
        c.expect(std::find(sks.begin(), sks.end(), r) != sks.end(), "S union T not a semikernel");
        ++unions;
      }
    }
    c.expect(meets == kCombinatorInstances && unions == kCombinatorInstances, "too few combinator instances");
    detail << meets << "+" << unions << " combinator instances";

    // Resolution facts on random clausal theories.
    for (std::size_t k = 0; k < kRandomTheories; ++k) {
      const std::size_t n = 1 + rng() % 5;
      const ClausalTheory t = random_theory(rng, n, 8, 3);
      const Closure closure = saturate(t);
      const auto cmods = oracle::truth_table_models(t);
      const bool bottom = closure.has_empty_clause();
      c.expect(cmods.empty() == bottom, "no classical model iff [] derivable");
      c.expect(paradoxical_atoms(closure).empty() != bottom, "[] iff some atom paradoxical");

      const Clause a = random_clause(rng, n, 3);
      const auto classical = [&](const Clause& cl) {
        return std::all_of(cmods.begin(), cmods.end(), [&](const AtomSet& row) {
          return std::any_of(cl.literals().begin(), cl.literals().end(),
                             [&](const Literal& l) { return row.contains(l.atom) != l.negated; });
        });
      };
      if (closure.contains(a)) c.expect(classical(a), "derivable clause not classically entailed");
      const Closure with = closure_with_assumptions(t, a);
      c.expect(classical(a) == with.has_empty_clause(), "refutation completeness");
      c.expect(classical(a) == witness_subclause(closure, a).has_value(), "weakened completeness");

      // RES(T, A-) = RES(T) + A- + {P \ B | T |- P, B subset of A}
      std::set<Clause> expected;
      for (const Clause& cu : complement_units(a)) expected.insert(cu);
      for (const Clause& p : closure.clauses()) {
        expected.insert(p);
        std::vector<Literal> shared;
        for (const Literal& l : p.literals()) {
          if (a.contains(l)) shared.push_back(l);
        }
        for (std::uint32_t pick = 1; pick < (1u << shared.size()); ++pick) {
          std::vector<Literal> keep;
          for (const Literal& l : p.literals()) {
            const auto at = std::find(shared.begin(), shared.end(), l);
            if (at == shared.end() || !(pick >> (at - shared.begin()) & 1)) keep.push_back(l);
          }
          expected.insert(Clause(std::move(keep)));
        }
      }
      const std::set<Clause> actual(with.clauses().begin(), with.clauses().end());
      c.expect(actual == expected, "closure with assumptions identity");

      // Removing atoms keeps a derivable remainder of every derivable clause.
      AtomSet x(n);
      for (AtomId i = 0; i < n; ++i) {
        if (rng() % 3 == 0) x.insert(i);
      }
      const ClausalTheory reduced = remove_atoms(t, x);
      const Closure reduced_closure = saturate(reduced);
      for (const Clause& p : closure.clauses()) {
        if (p.atoms(n).is_subset_of(x)) continue;
        const Clause rest = translate(p.without_atoms(x), t.universe(), reduced.universe());
        c.expect(witness_subclause(reduced_closure, rest).has_value(), "remove_atoms lemma");
      }
    }
    detail << ", " << kRandomTheories << " random theories";

    // Step soundness under arbitrary three-valued partitions.
    std::size_t steps = 0;
    while (steps < kSoundnessInstances) {
      const std::size_t n = 1 + rng() % 5;
      const Partition3 p = random_partition(rng, n);
      const AtomId a = static_cast<AtomId>(rng() % n);
      c.expect(satisfies(p, Clause{Literal::pos(a), Literal::neg(a)}), "axiom unsatisfied");
      const LitMask left = mask_of_clause(random_clause(rng, n, 3)) & ~(LitMask{3} << (2 * a));
      const LitMask right = mask_of_clause(random_clause(rng, n, 3)) & ~(LitMask{3} << (2 * a));
      const LitMask pa = left | LitMask{1} << (2 * a), na = right | LitMask{2} << (2 * a);
      if (!mask_satisfies(p, pa, n) || !mask_satisfies(p, na, n)) continue;
      c.expect(satisfies(p, clause_of_mask(left | right)), "resolvent unsatisfied");
      ++steps;
    }
    detail << ", " << steps << " soundness steps";

    // Paradox closure and the consistent subdiscourse on the corpus.
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Digraph& g = graphs[i].graph;
      const Reasoner& r = *reasoners[i];
      const AtomSet& bottom = r.paradox_atoms();
      const std::string tag = describe(graphs[i].spec);
      c.expect(g.out(bottom).is_subset_of(bottom), "paradox set not E-closed " + tag);
      if (bottom.count() == g.size()) continue;

      const auto report = consistent_subtheory(r.theory(), r.closure(), &g);
      const Universe& hu = report.theory.universe();
      const Closure sub = saturate(report.theory);
      for (const Clause& cl : report.theory.clauses()) {
        c.expect(r.closure().contains(translate(cl, hu, g.universe())), "subdiscourse clause underivable " + tag);
      }
      for (const Clause& cl : sub.clauses()) {
        c.expect(r.closure().contains(translate(cl, hu, g.universe())), "subdiscourse not conservative " + tag);
      }
      c.expect(!sub.has_empty_clause(), "subdiscourse inconsistent " + tag);
      bool some_not_negated = false;
      for (AtomId h = 0; h < hu.size(); ++h) {
        const AtomId x = g.universe().at(hu.name(h));
        c.expect(sub.contains(Clause{Literal::pos(h)}) == r.closure().contains(Clause{Literal::pos(x)}),
                 "positive unit mismatch " + tag);
        const bool neg = sub.contains(Clause{Literal::neg(h)});
        c.expect(neg == r.closure().contains(Clause{Literal::neg(x)}), "negative unit mismatch " + tag);
        if (!neg) {
          some_not_negated = true;
          c.expect(g.successors(x).is_subset_of(report.healthy_atoms), "unnegated vertex leaves G° " + tag);
        }
      }
      c.expect(some_not_negated, "every healthy atom refuted " + tag);
      for (const auto& tp : cmod_okk(report, g)) {
        c.expect(is_semikernel(g, tp.true_set), "classical model of subdiscourse not a semikernel " + tag);
      }
    }

    // Constructive extension of pSK partitions.
    std::size_t combined = 0;
    for (const auto& [spec, g] : graphs) {
      const auto closed = enumerate_closed_semikernels(g);
      const auto sks = oracle::brute_semikernels(g);
      for (const AtomSet& s1 : closed) {
        const Partition3 alpha = partition_of(g, s1);
        for (const AtomSet& s2 : closed) {
          const Partition3 beta = partition_of(g, s2);
          if (!beta.boolean_domain().intersects(alpha.paradox_set)) continue;
          const Partition3 gamma = combine_psk(g, alpha, beta);
          c.expect(gamma.true_set == (alpha.true_set | (beta.true_set & alpha.paradox_set)),
                   "combination value " + describe(spec));
          c.expect(std::find(sks.begin(), sks.end(), gamma.true_set) != sks.end() &&
                       is_inverse_closed(g, gamma.true_set),
                   "combination not pSK " + describe(spec));
          c.expect(alpha.boolean_domain().is_proper_subset_of(gamma.boolean_domain()),
                   "combination does not extend " + describe(spec));
          ++combined;
        }
      }
    }
    detail << ", " << combined << " pSK combinations";
    return detail.str();
  });

  criterion(10, "contradictory premises: cW proves an unrelated atom, aW/bW does not", [](Check& c) {
    const std::string file = "\"" + fixture_path("lewis.cls") + "\"";
    const int cw = run_cli("prove b --weakening cw " + file);
    const int awbw = run_cli("prove b --weakening awbw " + file);
    c.expect(cw == 0, "cw exit " + std::to_string(cw));
    c.expect(awbw == 1, "awbw exit " + std::to_string(awbw));
    return "cw exit " + std::to_string(cw) + ", awbw exit " + std::to_string(awbw);
  });

  criterion(11, "minimal derivable clauses are the relevant ones; components bound derivations", [&](Check& c) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Digraph& g = graphs[i].graph;
      const std::string tag = describe(graphs[i].spec);
      const auto mins = min_clauses(*reasoners[i]);
      c.expect(mins == brute_relevant(g), "Min vs relevant " + tag);
      c.expect(sorted_clauses(min_clauses_via_subtheory(reasoners[i]->theory())) == mins,
               "Min vs subdiscourse characterization " + tag);
      c.expect(component_claim_check(g), "component claim " + tag);
    }
    return std::string{};
  });

  std::cout << (failed_criteria == 0 ? "all criteria passed" : std::to_string(failed_criteria) + " criteria failed")
            << std::endl;
  return failed_criteria == 0 ? 0 : 1;
}
