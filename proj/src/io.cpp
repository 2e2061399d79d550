#include "parakernel/io.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace parakernel::io {

using nlohmann::json;

const char* to_string(InputKind kind) noexcept {
  switch (kind) {
    case InputKind::GnfTheory: return "gnf";
    case InputKind::EdgeList: return "edges";
    case InputKind::ClauseSet: return "clauses";
  }
  return "?";
}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string_view text;  // comment stripped
};

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    out.push_back({++number, line});
    start = end + 1;
  }
  return out;
}

std::vector<Token> tokens_of(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    out.push_back({std::string(line.substr(i, j - i)), i + 1});
    i = j;
  }
  return out;
}

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

void require_atom(const Token& t, std::size_t line) {
  if (!is_valid_atom_name(t.text)) {
    throw ParseError(line, t.column, "invalid atom name '" + t.text + "'");
  }
}

// Literal token: optional '~' then an atom name.
std::pair<std::string, bool> literal_of(const Token& t, std::size_t line) {
  const bool negated = !t.text.empty() && t.text.front() == '~';
  std::string name = negated ? t.text.substr(1) : t.text;
  if (!is_valid_atom_name(name)) {
    throw ParseError(line, t.column, "invalid literal '" + t.text + "'");
  }
  return {std::move(name), negated};
}

std::vector<std::pair<std::string, bool>> clause_literals(const std::vector<Token>& tokens,
                                                          std::size_t line) {
  std::set<std::pair<std::string, bool>> lits;
  if (tokens.size() == 1 && tokens.front().text == "[]") return {};
  for (const Token& t : tokens) {
    if (t.text == "[]") throw ParseError(line, t.column, "'[]' must stand alone");
    lits.insert(literal_of(t, line));
  }
  return {lits.begin(), lits.end()};
}

Clause clause_over(const std::vector<std::pair<std::string, bool>>& lits, const Universe& u) {
  std::vector<Literal> out;
  for (const auto& [name, negated] : lits) out.push_back({u.at(name), negated});
  return Clause(std::move(out));
}

}  // namespace

GnfTheory parse_theory(std::string_view text, bool complete_loose) {
  GnfTheory t;
  std::map<std::string, std::size_t> defined_at;
  for (const Line& line : lines_of(text)) {
    if (blank(line.text)) continue;
    const std::size_t colon = line.text.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line.number, 1, "expected 'atom : atoms...'");
    }
    const auto lhs = tokens_of(line.text.substr(0, colon));
    if (lhs.size() != 1) {
      throw ParseError(line.number, lhs.empty() ? colon + 1 : lhs.back().column,
                       "exactly one atom must precede ':'");
    }
    require_atom(lhs.front(), line.number);
    auto rhs = tokens_of(line.text.substr(colon + 1));
    std::set<std::string> negated;
    for (Token& tok : rhs) {
      tok.column += colon + 1;
      if (tok.text.find(':') != std::string::npos) {
        throw ParseError(line.number, tok.column, "unexpected ':'");
      }
      require_atom(tok, line.number);
      negated.insert(tok.text);
    }
    const std::string& x = lhs.front().text;
    if (auto [it, fresh] = defined_at.emplace(x, line.number); !fresh) {
      throw Error(ErrorKind::Validation, "line " + std::to_string(line.number) + ": atom '" + x +
                                             "' already defined on line " +
                                             std::to_string(it->second));
    }
    t.formulas.emplace(x, std::move(negated));
  }
  if (complete_loose) return complete_loose_atoms(t);
  if (auto loose = t.loose_atoms(); !loose.empty()) {
    throw Error(ErrorKind::Validation, "atom '" + loose.front() +
                                           "' occurs negated but has no formula of its own "
                                           "(use --complete-loose to add the b' gadget)");
  }
  return t;
}

Digraph parse_edge_list(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Line& line : lines_of(text)) {
    const auto tokens = tokens_of(line.text);
    if (tokens.empty()) continue;
    if (tokens.front().text == "vertex") {
      if (tokens.size() < 2) throw ParseError(line.number, tokens.front().column, "vertex name expected");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        require_atom(tokens[i], line.number);
        vertices.push_back(tokens[i].text);
      }
      continue;
    }
    // accept "a -> b" as well as "a->b"
    const std::size_t arrow = line.text.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError(line.number, tokens.front().column, "expected 'a -> b' or 'vertex x'");
    }
    auto from = tokens_of(line.text.substr(0, arrow));
    auto to = tokens_of(line.text.substr(arrow + 2));
    for (Token& tok : to) tok.column += arrow + 2;
    if (from.size() != 1 || to.size() != 1) {
      throw ParseError(line.number, arrow + 1, "an edge joins exactly one source and one target");
    }
    require_atom(from.front(), line.number);
    require_atom(to.front(), line.number);
    vertices.push_back(from.front().text);
    vertices.push_back(to.front().text);
    edges.emplace_back(from.front().text, to.front().text);
  }
  return Digraph::from_names(std::move(vertices), edges);
}

ClausalTheory parse_clause_set(std::string_view text) {
  std::vector<std::string> atoms;
  std::vector<std::vector<std::pair<std::string, bool>>> raw;
  for (const Line& line : lines_of(text)) {
    const auto tokens = tokens_of(line.text);
    if (tokens.empty()) continue;
    if (tokens.front().text == "@atoms") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        require_atom(tokens[i], line.number);
        atoms.push_back(tokens[i].text);
      }
      continue;
    }
    auto lits = clause_literals(tokens, line.number);
    for (const auto& l : lits) atoms.push_back(l.first);
    raw.push_back(std::move(lits));
  }
  Universe u(std::move(atoms));
  std::vector<Clause> clauses;
  for (const auto& lits : raw) clauses.push_back(clause_over(lits, u));
  return ClausalTheory(std::move(u), std::move(clauses));
}

std::vector<std::pair<std::string, bool>> parse_clause_names(std::string_view text) {
  if (text.find('\n') != std::string_view::npos) {
    throw ParseError(0, 0, "a clause must fit on one line");
  }
  const auto tokens = tokens_of(lines_of(text).front().text);
  if (tokens.empty()) throw ParseError(1, 1, "empty input; write '[]' for the empty clause");
  return clause_literals(tokens, 1);
}

Clause parse_clause(std::string_view text, const Universe& universe) {
  return clause_over(parse_clause_names(text), universe);
}

InputKind detect_kind(std::string_view text) {
  for (const Line& line : lines_of(text)) {
    const auto tokens = tokens_of(line.text);
    if (tokens.empty()) continue;
    if (tokens.front().text == "@atoms") return InputKind::ClauseSet;
    if (line.text.find("->") != std::string_view::npos || tokens.front().text == "vertex") {
      return InputKind::EdgeList;
    }
    if (line.text.find(':') != std::string_view::npos) return InputKind::GnfTheory;
    return InputKind::ClauseSet;
  }
  return InputKind::GnfTheory;
}

std::optional<Digraph> InputDocument::graph() const {
  switch (kind) {
    case InputKind::GnfTheory: return theory_to_graph(std::get<GnfTheory>(payload));
    case InputKind::EdgeList: return std::get<Digraph>(payload);
    case InputKind::ClauseSet: return std::nullopt;
  }
  return std::nullopt;
}

ClausalTheory InputDocument::clauses() const {
  if (kind == InputKind::ClauseSet) return std::get<ClausalTheory>(payload);
  return clausal_theory(*graph());
}

InputDocument parse_document(std::string_view text, std::optional<InputKind> kind,
                             bool complete_loose, std::string source) {
  InputDocument doc;
  doc.kind = kind.value_or(detect_kind(text));
  doc.source = std::move(source);
  switch (doc.kind) {
    case InputKind::GnfTheory: doc.payload = parse_theory(text, complete_loose); break;
    case InputKind::EdgeList: doc.payload = parse_edge_list(text); break;
    case InputKind::ClauseSet: doc.payload = parse_clause_set(text); break;
  }
  return doc;
}

std::string serialize_theory(const GnfTheory& theory) {
  std::string out;
  for (const auto& [x, ys] : theory.formulas) {
    out += x + " :";
    for (const auto& y : ys) out += " " + y;
    out += '\n';
  }
  return out;
}

std::string serialize_edge_list(const Digraph& g) {
  std::string out;
  for (AtomId x = 0; x < g.size(); ++x) {
    if (g.successors(x).empty() && g.predecessors(x).empty()) {
      out += "vertex " + g.universe().name(x) + "\n";
    }
  }
  for (auto [from, to] : g.edges()) {
    out += g.universe().name(from) + " -> " + g.universe().name(to) + "\n";
  }
  return out;
}

std::string serialize_clause_set(const ClausalTheory& theory) {
  std::string out = "@atoms";
  for (const auto& name : theory.universe().names()) out += " " + name;
  out += '\n';
  for (const Clause& c : theory.clauses()) out += to_string(c, theory.universe()) + "\n";
  return out;
}

std::string serialize(const InputDocument& doc) {
  switch (doc.kind) {
    case InputKind::GnfTheory: return serialize_theory(std::get<GnfTheory>(doc.payload));
    case InputKind::EdgeList: return serialize_edge_list(std::get<Digraph>(doc.payload));
    case InputKind::ClauseSet: return serialize_clause_set(std::get<ClausalTheory>(doc.payload));
  }
  return {};
}

std::string format_set(const Universe& u, const AtomSet& s) {
  std::string out = "{";
  for (const auto& name : u.names_of(s)) {
    if (out.size() > 1) out += ", ";
    out += name;
  }
  return out + "}";
}

std::string format_partition(const Universe& u, const Partition3& p) {
  return "true: " + format_set(u, p.true_set) + "  false: " + format_set(u, p.false_set) +
         "  paradox: " + format_set(u, p.paradox_set);
}

std::string format_proof(const Proof& proof, const Universe& u) {
  std::string out;
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    out += std::to_string(i + 1) + ": " + to_string(s.clause, u) + "  [";
    if (s.origin == Origin::Resolvent) {
      out += "res " + std::to_string(s.positive_premise + 1) + " " +
             std::to_string(s.negative_premise + 1) + " on " + u.name(s.pivot);
    } else {
      out += parakernel::to_string(s.origin);
    }
    out += "]\n";
  }
  return out;
}

json atoms_json(const Universe& u, const AtomSet& s) { return u.names_of(s); }

json partition_json(const Universe& u, const Partition3& p) {
  return {{"true", atoms_json(u, p.true_set)},
          {"false", atoms_json(u, p.false_set)},
          {"paradox", atoms_json(u, p.paradox_set)}};
}

json models_json(const Universe& u, const std::vector<Partition3>& models) {
  json out = json::array();
  for (const auto& m : models) out.push_back(partition_json(u, m));
  return out;
}

json clauses_json(const Universe& u, const std::vector<Clause>& clauses) {
  std::vector<std::string> texts;
  texts.reserve(clauses.size());
  for (const Clause& c : clauses) texts.push_back(to_string(c, u));
  std::sort(texts.begin(), texts.end());
  return texts;
}

json proof_json(const Proof& proof, const Universe& u) {
  json steps = json::array();
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    json step = {{"step", i + 1},
                 {"clause", to_string(s.clause, u)},
                 {"rule", parakernel::to_string(s.origin)}};
    if (s.origin == Origin::Resolvent) {
      step["premises"] = {s.positive_premise + 1, s.negative_premise + 1};
      step["pivot"] = u.name(s.pivot);
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

json verdict_json(const Universe& u, const EntailmentVerdict& v) {
  json via = {{"kind", parakernel::to_string(v.via)}};
  if (v.witness) via["clause"] = to_string(*v.witness, u);
  if (v.countermodel) via["model"] = partition_json(u, *v.countermodel);
  return {{"holds", v.holds}, {"via", via}};
}

std::vector<Partition3> models_from_json(const json& j, const Universe& u) {
  std::vector<Partition3> out;
  for (const auto& m : j) {
    out.push_back({u.set_of(m.at("true").get<std::vector<std::string>>()),
                   u.set_of(m.at("false").get<std::vector<std::string>>()),
                   u.set_of(m.at("paradox").get<std::vector<std::string>>())});
  }
  return out;
}

}  // namespace parakernel::io
