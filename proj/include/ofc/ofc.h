#ifndef OFC_H
#define OFC_H

/* Ordered-field graph analysis: dual Cheeger constant and normalized
 * Laplacian spectra for small graphs weighted over exact rationals, floats,
 * or truncated Levi-Civita series.
 *
 * All functions returning ofc_status set a thread-local error message
 * readable via ofc_last_error() on failure. Strings returned through char**
 * out-parameters are heap-allocated and must be released with
 * ofc_string_free().
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define OFC_API __declspec(dllexport)
#else
#define OFC_API __attribute__((visibility("default")))
#endif

typedef struct ofc_graph ofc_graph;

typedef enum ofc_status {
  OFC_OK = 0,
  OFC_ERR_INVALID_ARGUMENT = 1,
  OFC_ERR_PARSE = 2,             /* malformed document, weight or expression */
  OFC_ERR_DOMAIN = 3,            /* precondition violated (zero division, isolated vertex, ...) */
  OFC_ERR_NOT_REPRESENTABLE = 4, /* value exists but not in the requested backend */
  OFC_ERR_NO_CONVERGENCE = 5,    /* iterative refinement hit its cap */
  OFC_ERR_LIMIT = 6,             /* size cap exceeded */
  OFC_ERR_INTERNAL = 7
} ofc_status;

typedef enum ofc_certify_outcome {
  OFC_CERTIFY_PASS = 0,
  OFC_CERTIFY_FAIL = 1,
  OFC_CERTIFY_INDETERMINATE = 3 /* some verdict stayed indistinguishable */
} ofc_certify_outcome;

OFC_API const char* ofc_version(void);

/* Message for the last failed call on this thread; empty string otherwise. */
OFC_API const char* ofc_last_error(void);

OFC_API void ofc_string_free(char* s);

/* Graph construction. Documents are JSON:
 *   {"field": "rational|float|lc-rational|lc-float",
 *    "truncation_order": "8",            // optional, rational literal
 *    "vertices": ["x", "y", ...],
 *    "edges": [{"u": "x", "v": "y", "w": "1 - 1/2*e^1"}, ...]}
 *
 * json points at len bytes and need not be NUL-terminated.
 */
OFC_API ofc_status ofc_graph_parse(const char* json, size_t len, ofc_graph** out);

/* Families: "triangle" {"n": 1}; "near-bipartite-complete" {"k": 2, "n": 1};
 * "complete-unit" {"n": 4}. */
OFC_API ofc_status ofc_graph_generate(const char* family, const char* params_json,
                                      ofc_graph** out);

OFC_API void ofc_graph_free(ofc_graph* g);

OFC_API ofc_status ofc_graph_to_json(const ofc_graph* g, char** out_json);
OFC_API int ofc_graph_vertex_count(const ofc_graph* g);
OFC_API int ofc_graph_edge_count(const ofc_graph* g);
/* Backend tag as a static string; NULL on a NULL graph. Not to be freed. */
OFC_API const char* ofc_graph_field(const ofc_graph* g);

/* Options JSON (all fields optional):
 *   {"truncation_order": "8",   // expansion window override, rational > 0
 *    "max_bruteforce": 14}      // vertex cap for the Cheeger enumeration
 *
 * The analyze report carries the input summary, connectivity, bipartiteness,
 * the spectrum with per-eigenvalue status flags, the dual Cheeger constant
 * with its witness pair, the inequality verdict table and timing.
 */
OFC_API ofc_status ofc_analyze(const ofc_graph* g, const char* options_json,
                               char** out_report_json);

/* Same report as ofc_analyze plus *out_outcome summarizing the verdict
 * table: pass only when every verdict holds. */
OFC_API ofc_status ofc_certify(const ofc_graph* g, const char* options_json,
                               char** out_report_json, int* out_outcome);

OFC_API ofc_status ofc_report_to_markdown(const char* report_json, char** out_markdown);

/* Parse an element expression in the given backend and reformat it
 * canonically. */
OFC_API ofc_status ofc_element_canonicalize(const char* expr, const char* backend,
                                            char** out_canonical);

#ifdef __cplusplus
}
#endif

#endif /* OFC_H */
