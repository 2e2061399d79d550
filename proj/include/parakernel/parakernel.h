/* C interface to the parakernel library.
 *
 * Every fallible call returns a pk_status; on failure the message is
 * available from pk_last_error() on the same thread until the next call.
 * Strings handed out through char** parameters are owned by the caller and
 * released with pk_string_free(). Output pointers may be NULL when the
 * caller only wants the status or the decision.
 */
#ifndef PARAKERNEL_H
#define PARAKERNEL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PARAKERNEL_BUILDING)
#    define PK_API __declspec(dllexport)
#  else
#    define PK_API __declspec(dllimport)
#  endif
#else
#  define PK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pk_document pk_document;

typedef enum pk_status {
  PK_OK = 0,
  PK_ERR_INVALID_ARGUMENT,
  PK_ERR_PARSE,
  PK_ERR_VALIDATION,
  PK_ERR_UNKNOWN_ATOM,
  PK_ERR_PRECONDITION,
  PK_ERR_RESOURCE,
  PK_ERR_UNSUPPORTED,
  PK_ERR_INTERNAL
} pk_status;

typedef enum pk_format {
  PK_FORMAT_AUTO = 0,
  PK_FORMAT_GNF,
  PK_FORMAT_EDGES,
  PK_FORMAT_CLAUSES
} pk_format;

typedef enum pk_render { PK_RENDER_TEXT = 0, PK_RENDER_JSON } pk_render;

typedef enum pk_weakening {
  PK_WEAKENING_NONE = 0,
  PK_WEAKENING_AWBW,
  PK_WEAKENING_CW
} pk_weakening;

typedef enum pk_entailment {
  PK_ENTAIL_PARA = 0,
  PK_ENTAIL_SEMANTIC,
  PK_ENTAIL_CLASSICAL
} pk_entailment;

typedef struct pk_options {
  size_t max_atoms;   /* enumeration cap on graph size */
  size_t max_clauses; /* saturation cap */
  int use_oracle;     /* nonzero: brute-force reference paths */
  pk_render render;
} pk_options;

PK_API void pk_options_init(pk_options* options);

/* `format` PK_FORMAT_AUTO sniffs the first meaningful line. */
PK_API pk_status pk_document_parse(const char* text, size_t length, pk_format format,
                                   int complete_loose, pk_document** out);
PK_API void pk_document_free(pk_document* doc);
PK_API pk_format pk_document_format(const pk_document* doc);
PK_API int pk_document_has_graph(const pk_document* doc);
PK_API size_t pk_document_atom_count(const pk_document* doc);
PK_API pk_status pk_document_serialize(const pk_document* doc, char** out);

PK_API pk_status pk_kernels(const pk_document* doc, const pk_options* options, char** out);
PK_API pk_status pk_semikernels(const pk_document* doc, const pk_options* options, char** out);
PK_API pk_status pk_models(const pk_document* doc, const pk_options* options, char** out);
PK_API pk_status pk_paradox(const pk_document* doc, const pk_options* options, char** out);
PK_API pk_status pk_subdiscourse(const pk_document* doc, const pk_options* options, char** out);
PK_API pk_status pk_closure(const pk_document* doc, const pk_options* options, char** out);
PK_API pk_status pk_min_clauses(const pk_document* doc, const pk_options* options, char** out);

/* Decision calls store 1 (yes) or 0 (no) in *holds. */
PK_API pk_status pk_prove(const pk_document* doc, const char* clause, pk_weakening mode,
                          const pk_options* options, int* holds, char** out);
PK_API pk_status pk_entails(const pk_document* doc, const char* clause, pk_entailment mode,
                            const pk_options* options, int* holds, char** out);
PK_API pk_status pk_relevant(const pk_document* doc, const char* clause,
                             const pk_options* options, int* holds, char** out);
/* *holds is 1 when engine and oracle agree on all `count` graphs. */
PK_API pk_status pk_check_random(size_t n, double edge_prob, uint64_t seed, size_t count,
                                 const pk_options* options, int* holds, char** out);

PK_API const char* pk_last_error(void);
PK_API const char* pk_status_name(pk_status status);
PK_API void pk_string_free(char* s);
PK_API const char* pk_version(void);

#ifdef __cplusplus
}
#endif

#endif
