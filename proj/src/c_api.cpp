#include "parakernel/parakernel.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "parakernel/commands.hpp"

struct pk_document {
  parakernel::io::InputDocument doc;
};

namespace {

namespace pk = parakernel;
namespace cmd = parakernel::commands;

thread_local std::string last_error;

pk_status fail(pk_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

pk_status status_of(pk::ErrorKind kind) {
  switch (kind) {
    case pk::ErrorKind::Parse: return PK_ERR_PARSE;
    case pk::ErrorKind::Validation: return PK_ERR_VALIDATION;
    case pk::ErrorKind::UnknownAtom: return PK_ERR_UNKNOWN_ATOM;
    case pk::ErrorKind::Precondition: return PK_ERR_PRECONDITION;
    case pk::ErrorKind::Resource: return PK_ERR_RESOURCE;
    case pk::ErrorKind::Unsupported: return PK_ERR_UNSUPPORTED;
    case pk::ErrorKind::Internal: return PK_ERR_INTERNAL;
  }
  return PK_ERR_INTERNAL;
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
pk_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const pk::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PK_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(PK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PK_ERR_INTERNAL, "unknown exception");
  }
}

cmd::CommandOptions convert(const pk_options* options) {
  pk_options o;
  pk_options_init(&o);
  if (options) o = *options;
  cmd::CommandOptions c;
  c.enumeration.max_atoms = o.max_atoms;
  c.saturation.max_clauses = o.max_clauses;
  c.use_oracle = o.use_oracle != 0;
  c.json = o.render == PK_RENDER_JSON;
  return c;
}

pk_status deliver(const cmd::CommandResult& r, int* holds, char** out) {
  if (holds) *holds = r.decision.value_or(false) ? 1 : 0;
  if (out) *out = copy_out(r.output);
  return PK_OK;
}

template <typename F>
pk_status run(const pk_document* doc, const pk_options* options, char** out, F&& f) {
  return guarded([&] {
    if (!doc) return fail(PK_ERR_INVALID_ARGUMENT, "document is null");
    return deliver(f(doc->doc, convert(options)), nullptr, out);
  });
}

template <typename F>
pk_status decide(const pk_document* doc, const char* clause, const pk_options* options, int* holds,
                 char** out, F&& f) {
  return guarded([&] {
    if (!doc) return fail(PK_ERR_INVALID_ARGUMENT, "document is null");
    if (!clause) return fail(PK_ERR_INVALID_ARGUMENT, "clause is null");
    return deliver(f(doc->doc, std::string(clause), convert(options)), holds, out);
  });
}

}  // namespace

extern "C" {

void pk_options_init(pk_options* options) {
  if (!options) return;
  options->max_atoms = pk::EnumerationLimits{}.max_atoms;
  options->max_clauses = pk::SaturationLimits{}.max_clauses;
  options->use_oracle = 0;
  options->render = PK_RENDER_TEXT;
}

pk_status pk_document_parse(const char* text, size_t length, pk_format format, int complete_loose,
                            pk_document** out) {
  return guarded([&] {
    if (!out) return fail(PK_ERR_INVALID_ARGUMENT, "output handle is null");
    *out = nullptr;
    if (!text && length != 0) return fail(PK_ERR_INVALID_ARGUMENT, "text is null");
    std::optional<pk::io::InputKind> kind;
    switch (format) {
      case PK_FORMAT_AUTO: break;
      case PK_FORMAT_GNF: kind = pk::io::InputKind::GnfTheory; break;
      case PK_FORMAT_EDGES: kind = pk::io::InputKind::EdgeList; break;
      case PK_FORMAT_CLAUSES: kind = pk::io::InputKind::ClauseSet; break;
      default: return fail(PK_ERR_INVALID_ARGUMENT, "unknown format");
    }
    std::string_view view(text ? text : "", length);
    *out = new pk_document{pk::io::parse_document(view, kind, complete_loose != 0)};
    return PK_OK;
  });
}

void pk_document_free(pk_document* doc) { delete doc; }

pk_format pk_document_format(const pk_document* doc) {
  if (!doc) return PK_FORMAT_AUTO;
  switch (doc->doc.kind) {
    case pk::io::InputKind::GnfTheory: return PK_FORMAT_GNF;
    case pk::io::InputKind::EdgeList: return PK_FORMAT_EDGES;
    case pk::io::InputKind::ClauseSet: return PK_FORMAT_CLAUSES;
  }
  return PK_FORMAT_AUTO;
}

int pk_document_has_graph(const pk_document* doc) {
  return doc && doc->doc.kind != pk::io::InputKind::ClauseSet ? 1 : 0;
}

size_t pk_document_atom_count(const pk_document* doc) {
  if (!doc) return 0;
  try {
    return doc->doc.clauses().universe().size();
  } catch (...) {
    return 0;
  }
}

pk_status pk_document_serialize(const pk_document* doc, char** out) {
  return guarded([&] {
    if (!doc || !out) return fail(PK_ERR_INVALID_ARGUMENT, "null argument");
    *out = copy_out(pk::io::serialize(doc->doc));
    return PK_OK;
  });
}

pk_status pk_kernels(const pk_document* doc, const pk_options* options, char** out) {
  return run(doc, options, out, cmd::run_kernels);
}
pk_status pk_semikernels(const pk_document* doc, const pk_options* options, char** out) {
  return run(doc, options, out, cmd::run_semikernels);
}
pk_status pk_models(const pk_document* doc, const pk_options* options, char** out) {
  return run(doc, options, out, cmd::run_models);
}
pk_status pk_paradox(const pk_document* doc, const pk_options* options, char** out) {
  return run(doc, options, out, cmd::run_paradox);
}
pk_status pk_subdiscourse(const pk_document* doc, const pk_options* options, char** out) {
  return run(doc, options, out, cmd::run_subdiscourse);
}
pk_status pk_closure(const pk_document* doc, const pk_options* options, char** out) {
  return run(doc, options, out, cmd::run_closure);
}
pk_status pk_min_clauses(const pk_document* doc, const pk_options* options, char** out) {
  return run(doc, options, out, cmd::run_min);
}

pk_status pk_prove(const pk_document* doc, const char* clause, pk_weakening mode,
                   const pk_options* options, int* holds, char** out) {
  return decide(doc, clause, options, holds, out, [&](auto& d, const std::string& c, auto o) {
    switch (mode) {
      case PK_WEAKENING_NONE: return cmd::run_prove(d, c, pk::Weakening::None, o);
      case PK_WEAKENING_AWBW: return cmd::run_prove(d, c, pk::Weakening::AwBw, o);
      case PK_WEAKENING_CW: return cmd::run_prove(d, c, pk::Weakening::Cw, o);
    }
    throw pk::Error(pk::ErrorKind::Precondition, "unknown weakening mode");
  });
}

pk_status pk_entails(const pk_document* doc, const char* clause, pk_entailment mode,
                     const pk_options* options, int* holds, char** out) {
  return decide(doc, clause, options, holds, out, [&](auto& d, const std::string& c, auto o) {
    switch (mode) {
      case PK_ENTAIL_PARA: return cmd::run_entails(d, c, cmd::EntailmentMode::Para, o);
      case PK_ENTAIL_SEMANTIC: return cmd::run_entails(d, c, cmd::EntailmentMode::Semantic, o);
      case PK_ENTAIL_CLASSICAL: return cmd::run_entails(d, c, cmd::EntailmentMode::Classical, o);
    }
    throw pk::Error(pk::ErrorKind::Precondition, "unknown entailment mode");
  });
}

pk_status pk_relevant(const pk_document* doc, const char* clause, const pk_options* options,
                      int* holds, char** out) {
  return decide(doc, clause, options, holds, out, cmd::run_relevant);
}

pk_status pk_check_random(size_t n, double edge_prob, uint64_t seed, size_t count,
                          const pk_options* options, int* holds, char** out) {
  return guarded([&] {
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
      return fail(PK_ERR_INVALID_ARGUMENT, "edge probability must lie in [0, 1]");
    }
    return deliver(cmd::run_check_random({n, edge_prob, seed}, count, convert(options)), holds, out);
  });
}

const char* pk_last_error(void) { return last_error.c_str(); }

const char* pk_status_name(pk_status status) {
  switch (status) {
    case PK_OK: return "ok";
    case PK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PK_ERR_PARSE: return "parse error";
    case PK_ERR_VALIDATION: return "validation error";
    case PK_ERR_UNKNOWN_ATOM: return "unknown atom";
    case PK_ERR_PRECONDITION: return "precondition violated";
    case PK_ERR_RESOURCE: return "resource limit exceeded";
    case PK_ERR_UNSUPPORTED: return "unsupported";
    case PK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void pk_string_free(char* s) { std::free(s); }

const char* pk_version(void) { return "0.1.0"; }

}  // extern "C"
