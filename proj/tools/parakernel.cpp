// Command-line front end; everything goes through the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "parakernel/parakernel.h"

namespace {

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kResource = 3, kInternal = 4 };

int exit_code(pk_status status) {
  switch (status) {
    case PK_OK: return kYes;
    case PK_ERR_RESOURCE: return kResource;
    case PK_ERR_INTERNAL: return kInternal;
    default: return kUsage;
  }
}

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  text.assign(std::istreambuf_iterator<char>(in), {});
  return true;
}

int report(pk_status status) {
  std::cerr << "parakernel: " << pk_status_name(status) << ": " << pk_last_error() << "\n";
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernels, semikernels and paraconsistent resolution for GNF theories"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pk_version());

  pk_options opts;
  pk_options_init(&opts);
  bool json = false, oracle = false, complete_loose = false;
  std::string format = "auto";
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_flag("--oracle", oracle, "Use the brute-force reference implementations");
  app.add_flag("--complete-loose", complete_loose, "Give undefined atoms the b/b' gadget");
  app.add_option("--max-atoms", opts.max_atoms, "Largest graph the enumerators accept")
      ->capture_default_str();
  app.add_option("--max-clauses", opts.max_clauses, "Largest closure saturation may build")
      ->capture_default_str();
  app.add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"auto", "gnf", "edges", "clauses"}))
      ->capture_default_str();

  std::string input = "-";
  std::string clause;
  std::string weakening = "none";
  bool classical = false, semantic = false;
  std::size_t n = 5, count = 20;
  double p = 0.3;
  std::uint64_t seed = 1;

  using Plain = pk_status (*)(const pk_document*, const pk_options*, char**);
  const std::map<std::string, std::pair<Plain, const char*>> plain = {
      {"models", {pk_models, "Paraconsistent models (maximal closed semikernels)"}},
      {"kernels", {pk_kernels, "Kernels (classical models)"}},
      {"semikernels", {pk_semikernels, "All semikernels"}},
      {"paradox", {pk_paradox, "Paradoxical atoms"}},
      {"subdiscourse", {pk_subdiscourse, "Maximal consistent subtheory and border vertices"}},
      {"closure", {pk_closure, "All clauses derivable by resolution"}},
      {"min", {pk_min_clauses, "Minimal (relevant) derivable clauses"}},
  };
  for (const auto& [name, entry] : plain) {
    auto* sub = app.add_subcommand(name, entry.second)->fallthrough();
    sub->add_option("input", input, "Input file, '-' for stdin");
  }

  auto* prove = app.add_subcommand("prove", "Is CLAUSE provable, with the given weakening?")->fallthrough();
  prove->add_option("clause", clause, "Clause, e.g. \"a ~b\" or \"[]\"")->required();
  prove->add_option("input", input, "Input file, '-' for stdin");
  prove->add_option("--weakening", weakening, "Weakening rules")
      ->check(CLI::IsMember({"none", "awbw", "cw"}))
      ->capture_default_str();

  auto* entails = app.add_subcommand("entails", "Does the theory entail CLAUSE?")->fallthrough();
  entails->add_option("clause", clause, "Clause")->required();
  entails->add_option("input", input, "Input file, '-' for stdin");
  auto* classical_flag = entails->add_flag("--classical", classical, "Two-valued entailment");
  entails->add_flag("--semantic", semantic, "Check against the models instead of the closure")
      ->excludes(classical_flag);

  auto* relevant = app.add_subcommand("relevant", "Is CLAUSE a relevant consequence?")->fallthrough();
  relevant->add_option("clause", clause, "Clause")->required();
  relevant->add_option("input", input, "Input file, '-' for stdin");

  auto* check = app.add_subcommand("check-random", "Compare engine and oracle on random digraphs")
                    ->fallthrough();
  check->add_option("--n", n, "Vertices per graph")->capture_default_str();
  check->add_option("--p", p, "Edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  check->add_option("--seed", seed, "First seed")->capture_default_str();
  check->add_option("--count", count, "Number of graphs")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kYes : kUsage;
  }

  opts.use_oracle = oracle ? 1 : 0;
  opts.render = json ? PK_RENDER_JSON : PK_RENDER_TEXT;
  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  char* out = nullptr;
  int holds = 0;
  pk_status status = PK_OK;
  const bool decision = name == "prove" || name == "entails" || name == "relevant" || name == "check-random";

  if (name == "check-random") {
    status = pk_check_random(n, p, seed, count, &opts, &holds, &out);
  } else {
    std::string text;
    if (!read_input(input, text)) {
      std::cerr << "parakernel: cannot read '" << input << "'\n";
      return kUsage;
    }
    const std::map<std::string, pk_format> formats = {
        {"auto", PK_FORMAT_AUTO}, {"gnf", PK_FORMAT_GNF}, {"edges", PK_FORMAT_EDGES}, {"clauses", PK_FORMAT_CLAUSES}};
    pk_document* doc = nullptr;
    status = pk_document_parse(text.data(), text.size(), formats.at(format), complete_loose ? 1 : 0, &doc);
    if (status != PK_OK) return report(status);

    if (auto it = plain.find(name); it != plain.end()) {
      status = it->second.first(doc, &opts, &out);
    } else if (name == "prove") {
      const pk_weakening mode = weakening == "cw"     ? PK_WEAKENING_CW
                                : weakening == "awbw" ? PK_WEAKENING_AWBW
                                                      : PK_WEAKENING_NONE;
      status = pk_prove(doc, clause.c_str(), mode, &opts, &holds, &out);
    } else if (name == "entails") {
      const pk_entailment mode = classical ? PK_ENTAIL_CLASSICAL : semantic ? PK_ENTAIL_SEMANTIC : PK_ENTAIL_PARA;
      status = pk_entails(doc, clause.c_str(), mode, &opts, &holds, &out);
    } else {
      status = pk_relevant(doc, clause.c_str(), &opts, &holds, &out);
    }
    pk_document_free(doc);
  }

  if (status != PK_OK) return report(status);
  std::fputs(out, stdout);
  pk_string_free(out);
  if (!decision) return kYes;
  return holds ? kYes : kNo;
}
