#ifndef PARAKERNEL_IO_HPP
#define PARAKERNEL_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "parakernel/clauses.hpp"
#include "parakernel/consequence.hpp"
#include "parakernel/graph.hpp"
#include "parakernel/kernels.hpp"
#include "parakernel/resolution.hpp"

namespace parakernel::io {

inline constexpr int kJsonSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Text formats
//
//   GNF theory   one formula per line, "x : y1 y2 ..." for x <-> ~y1 & ~y2 ...;
//                "x :" is a sink.
//   edge list    "a -> b" per edge, "vertex x" for a vertex without edges.
//   clause set   one clause per line, literals separated by blanks, "~"
//                negates, "[]" is the empty clause; "@atoms x y" adds atoms
//                to the universe without stating a clause.
//
// In all three "#" starts a comment that runs to the end of the line.
// ---------------------------------------------------------------------------

enum class InputKind { GnfTheory, EdgeList, ClauseSet };

const char* to_string(InputKind kind) noexcept;

/// Rejects duplicate left-hand atoms; loose right-hand atoms are rejected
/// unless `complete_loose` is set, in which case they get the b/b' gadget.
GnfTheory parse_theory(std::string_view text, bool complete_loose = false);
Digraph parse_edge_list(std::string_view text);
ClausalTheory parse_clause_set(std::string_view text);

/// Literals of one clause as (name, negated), sorted and duplicate-free.
std::vector<std::pair<std::string, bool>> parse_clause_names(std::string_view text);
/// Throws UnknownAtom for names outside the universe.
Clause parse_clause(std::string_view text, const Universe& universe);

/// Kind of the first meaningful line: "@atoms" means clause set, "->" or a
/// leading "vertex" means edge list, ':' means GNF theory, anything else is
/// read as a clause. An empty document is an (empty) GNF theory.
InputKind detect_kind(std::string_view text);

struct InputDocument {
  InputKind kind = InputKind::GnfTheory;
  std::variant<GnfTheory, Digraph, ClausalTheory> payload;
  std::string source;

  /// The graph behind GNF and edge-list inputs.
  std::optional<Digraph> graph() const;
  /// cth(G) for graph inputs, the clauses themselves otherwise.
  ClausalTheory clauses() const;
};

InputDocument parse_document(std::string_view text, std::optional<InputKind> kind = std::nullopt,
                             bool complete_loose = false, std::string source = {});

std::string serialize_theory(const GnfTheory& theory);
std::string serialize_edge_list(const Digraph& g);
std::string serialize_clause_set(const ClausalTheory& theory);
std::string serialize(const InputDocument& doc);

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

/// "{a, a', b}"
std::string format_set(const Universe& u, const AtomSet& s);
/// "true: {a}  false: {a', b}  paradox: {c, d, e}"
std::string format_partition(const Universe& u, const Partition3& p);
/// One line per step: "<k>: <clause>  [input]" / "[axiom]" /
/// "[res <i> <j> on <atom>]", steps numbered from 1; i is the premise
/// holding the pivot positively.
std::string format_proof(const Proof& proof, const Universe& u);

nlohmann::json atoms_json(const Universe& u, const AtomSet& s);
nlohmann::json partition_json(const Universe& u, const Partition3& p);
nlohmann::json models_json(const Universe& u, const std::vector<Partition3>& models);
nlohmann::json clauses_json(const Universe& u, const std::vector<Clause>& clauses);
nlohmann::json proof_json(const Proof& proof, const Universe& u);
nlohmann::json verdict_json(const Universe& u, const EntailmentVerdict& v);

/// Inverse of models_json (the list, not the envelope).
std::vector<Partition3> models_from_json(const nlohmann::json& j, const Universe& u);

}  // namespace parakernel::io

#endif
