#include "parakernel/commands.hpp"

#include <algorithm>

#include "parakernel/consequence.hpp"

namespace parakernel::commands {

using nlohmann::json;

namespace {

json envelope(const char* command) { return {{"schema", io::kJsonSchemaVersion}, {"command", command}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Digraph need_graph(const io::InputDocument& doc, const char* command) {
  auto g = doc.graph();
  if (!g) {
    throw Error(ErrorKind::Unsupported,
                std::string("'") + command + "' needs a graph (GNF theory or edge list), not a clause set");
  }
  return *std::move(g);
}

std::vector<Partition3> models_for(const Digraph& g, const CommandOptions& opts) {
  return opts.use_oracle ? oracle::brute_models(g) : models(g, opts.enumeration);
}

CommandResult set_list(const char* command, const Universe& u, const std::vector<AtomSet>& sets,
                       const CommandOptions& opts) {
  if (opts.json) {
    json j = envelope(command);
    json list = json::array();
    for (const auto& s : sets) list.push_back(io::atoms_json(u, s));
    j[command] = std::move(list);
    return {dump(j), std::nullopt};
  }
  std::string out;
  for (const auto& s : sets) out += io::format_set(u, s) + "\n";
  return {out, std::nullopt};
}

std::string clause_lines(const Universe& u, std::vector<Clause> clauses) {
  std::sort(clauses.begin(), clauses.end(), [](const Clause& a, const Clause& b) { return canonical_less(a, b); });
  std::string out;
  for (const Clause& c : clauses) out += to_string(c, u) + "\n";
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

const char* mode_name(Weakening mode) {
  switch (mode) {
    case Weakening::None: return "none";
    case Weakening::AwBw: return "awbw";
    case Weakening::Cw: return "cw";
  }
  return "?";
}

const char* mode_name(EntailmentMode mode) {
  switch (mode) {
    case EntailmentMode::Para: return "para";
    case EntailmentMode::Semantic: return "semantic";
    case EntailmentMode::Classical: return "classical";
  }
  return "?";
}

}  // namespace

CommandResult run_kernels(const io::InputDocument& doc, const CommandOptions& opts) {
  const Digraph g = need_graph(doc, "kernels");
  auto ks = opts.use_oracle ? oracle::brute_kernels(g) : enumerate_kernels(g, opts.enumeration);
  return set_list("kernels", g.universe(), ks, opts);
}

CommandResult run_semikernels(const io::InputDocument& doc, const CommandOptions& opts) {
  const Digraph g = need_graph(doc, "semikernels");
  auto sks = opts.use_oracle ? oracle::brute_semikernels(g) : enumerate_semikernels(g, opts.enumeration);
  return set_list("semikernels", g.universe(), sks, opts);
}

CommandResult run_models(const io::InputDocument& doc, const CommandOptions& opts) {
  const Digraph g = need_graph(doc, "models");
  const auto ms = models_for(g, opts);
  if (opts.json) {
    json j = envelope("models");
    j["models"] = io::models_json(g.universe(), ms);
    return {dump(j), std::nullopt};
  }
  std::string out;
  for (const auto& m : ms) out += io::format_partition(g.universe(), m) + "\n";
  return {out, std::nullopt};
}

CommandResult run_paradox(const io::InputDocument& doc, const CommandOptions& opts) {
  const ClausalTheory t = doc.clauses();
  const AtomSet bottom = paradoxical_atoms(saturate(t, opts.saturation));
  if (opts.json) {
    json j = envelope("paradox");
    j["paradox"] = io::atoms_json(t.universe(), bottom);
    j["consistent"] = bottom.empty();
    return {dump(j), std::nullopt};
  }
  return {io::format_set(t.universe(), bottom) + "\n", std::nullopt};
}

CommandResult run_subdiscourse(const io::InputDocument& doc, const CommandOptions& opts) {
  const ClausalTheory t = doc.clauses();
  const auto g = doc.graph();
  const auto report = consistent_subtheory(t, g ? &*g : nullptr, opts.saturation);
  const Universe& healthy = report.theory.universe();
  if (opts.json) {
    json j = envelope("subdiscourse");
    j["paradox"] = io::atoms_json(t.universe(), report.paradox_atoms);
    j["healthy"] = io::atoms_json(t.universe(), report.healthy_atoms);
    j["border"] = report.border ? io::atoms_json(t.universe(), *report.border) : json(nullptr);
    j["theory"] = io::clauses_json(healthy, report.theory.clauses());
    return {dump(j), std::nullopt};
  }
  std::string out = "paradox: " + io::format_set(t.universe(), report.paradox_atoms) + "\n";
  if (report.border) out += "border: " + io::format_set(t.universe(), *report.border) + "\n";
  out += "theory:\n" + clause_lines(healthy, report.theory.clauses());
  return {out, std::nullopt};
}

CommandResult run_closure(const io::InputDocument& doc, const CommandOptions& opts) {
  const ClausalTheory t = doc.clauses();
  const Closure closure = saturate(t, opts.saturation);
  if (opts.json) {
    json j = envelope("closure");
    j["size"] = closure.size();
    j["empty_clause"] = closure.has_empty_clause();
    j["clauses"] = io::clauses_json(t.universe(), closure.clauses());
    return {dump(j), std::nullopt};
  }
  return {clause_lines(t.universe(), closure.clauses()), std::nullopt};
}

CommandResult run_min(const io::InputDocument& doc, const CommandOptions& opts) {
  const ClausalTheory t = doc.clauses();
  const auto mins = min_clauses(t, opts.saturation);
  if (opts.json) {
    json j = envelope("min");
    j["clauses"] = io::clauses_json(t.universe(), mins);
    return {dump(j), std::nullopt};
  }
  return {clause_lines(t.universe(), mins), std::nullopt};
}

CommandResult run_prove(const io::InputDocument& doc, const std::string& clause, Weakening mode,
                        const CommandOptions& opts) {
  const ClausalTheory t = doc.clauses();
  const Clause c = io::parse_clause(clause, t.universe());
  const Reasoner reasoner(t, opts.saturation);
  const bool holds = reasoner.provable(c, mode);

  // The derivation shown is for the clause itself or for the premise it is
  // weakened from; a bW step among paradoxical atoms has none.
  std::optional<Clause> premise;
  if (holds) {
    if (reasoner.closure().contains(c)) {
      premise = c;
    } else if (mode == Weakening::Cw) {
      premise = witness_subclause(reasoner.closure(), c);
    } else if (auto why = reasoner.explain(c); why.subclause) {
      premise = why.subclause;
    }
  }
  std::optional<Proof> proof;
  if (premise) proof = proof_of(reasoner.closure(), *premise);

  const Universe& u = t.universe();
  if (opts.json) {
    json j = envelope("prove");
    j["clause"] = to_string(c, u);
    j["weakening"] = mode_name(mode);
    j["holds"] = holds;
    j["premise"] = premise ? json(to_string(*premise, u)) : json(nullptr);
    j["proof"] = proof ? io::proof_json(*proof, u) : json(nullptr);
    return {dump(j), holds};
  }
  std::string out = yes_no(holds) + "\n";
  if (holds && !premise) out += "by weakening among paradoxical atoms " + io::format_set(u, reasoner.paradox_atoms()) + "\n";
  if (premise && !(*premise == c)) out += "weakened from " + to_string(*premise, u) + "\n";
  if (proof) out += io::format_proof(*proof, u);
  return {out, holds};
}

CommandResult run_entails(const io::InputDocument& doc, const std::string& clause,
                          EntailmentMode mode, const CommandOptions& opts) {
  const ClausalTheory t = doc.clauses();
  const Universe& u = t.universe();
  const Clause c = io::parse_clause(clause, u);

  EntailmentVerdict verdict;
  std::optional<json> extra;
  switch (mode) {
    case EntailmentMode::Para: {
      const Reasoner reasoner(t, opts.saturation);
      const ParaWitness why = reasoner.explain(c);
      verdict.holds = why.holds;
      if (why.kind == WitnessKind::AllParadox) {
        verdict.via = VerdictBasis::AllParadox;
      } else if (why.kind == WitnessKind::HealthySubclause) {
        verdict.via = VerdictBasis::HealthyWitness;
        verdict.witness = why.subclause;
      } else if (auto g = doc.graph()) {
        verdict = entails_semantic(models_for(*g, opts), c);
        if (verdict.holds) throw_internal("syntactic and semantic entailment disagree");
      }
      break;
    }
    case EntailmentMode::Semantic: {
      const Digraph g = need_graph(doc, "entails --semantic");
      verdict = entails_semantic(models_for(g, opts), c);
      break;
    }
    case EntailmentMode::Classical: {
      if (opts.use_oracle) {
        const auto rows = oracle::truth_table_models(t);
        verdict.holds = std::all_of(rows.begin(), rows.end(), [&](const AtomSet& row) {
          return std::any_of(c.literals().begin(), c.literals().end(),
                             [&](const Literal& l) { return row.contains(l.atom) != l.negated; });
        });
      } else {
        verdict.holds = classical_entails(t, c, opts.enumeration);
      }
      break;
    }
  }

  if (opts.json) {
    json j = envelope("entails");
    j["clause"] = to_string(c, u);
    j["mode"] = mode_name(mode);
    if (mode == EntailmentMode::Classical) {
      j["holds"] = verdict.holds;
    } else {
      j.update(io::verdict_json(u, verdict));
    }
    return {dump(j), verdict.holds};
  }
  std::string out = yes_no(verdict.holds) + "\n";
  if (mode != EntailmentMode::Classical) {
    if (verdict.witness) out += "witness: " + to_string(*verdict.witness, u) + "\n";
    if (verdict.holds && verdict.via == VerdictBasis::AllParadox) {
      out += "all atoms paradoxical: " + io::format_set(u, c.atoms(u.size())) + "\n";
    }
    if (verdict.countermodel) out += "countermodel: " + io::format_partition(u, *verdict.countermodel) + "\n";
  }
  return {out, verdict.holds};
}

CommandResult run_relevant(const io::InputDocument& doc, const std::string& clause,
                           const CommandOptions& opts) {
  const ClausalTheory t = doc.clauses();
  const Clause c = io::parse_clause(clause, t.universe());
  const bool holds = is_relevant(Reasoner(t, opts.saturation), c);
  if (opts.json) {
    json j = envelope("relevant");
    j["clause"] = to_string(c, t.universe());
    j["holds"] = holds;
    return {dump(j), holds};
  }
  return {yes_no(holds) + "\n", holds};
}

CommandResult run_check_random(const oracle::RandomGraphSpec& first, std::size_t count,
                               const CommandOptions& opts) {
  json mismatches = json::array();
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    oracle::RandomGraphSpec spec = first;
    spec.seed = first.seed + i;
    const Digraph g = oracle::random_digraph(spec);
    const auto note = [&](const char* what) {
      mismatches.push_back({{"seed", spec.seed}, {"check", what}});
      out += "seed " + std::to_string(spec.seed) + ": " + what + " differ\n";
    };
    const auto kernels = enumerate_kernels(g, opts.enumeration);
    if (kernels != oracle::brute_kernels(g)) note("kernels");
    if (enumerate_semikernels(g, opts.enumeration) != oracle::brute_semikernels(g)) note("semikernels");
    if (models(g, opts.enumeration) != oracle::brute_models(g)) note("models");
    if (kernels != oracle::truth_table_models(clausal_theory(g))) note("classical models");
  }
  const bool clean = mismatches.empty();
  if (opts.json) {
    json j = envelope("check-random");
    j["n"] = first.n;
    j["p"] = first.edge_prob;
    j["seed"] = first.seed;
    j["count"] = count;
    j["mismatches"] = std::move(mismatches);
    j["holds"] = clean;
    return {dump(j), clean};
  }
  out += "checked " + std::to_string(count) + " graphs, " +
         std::to_string(mismatches.size()) + " mismatches\n";
  return {out, clean};
}

}  // namespace parakernel::commands
