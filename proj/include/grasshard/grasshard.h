#ifndef GRASSHARD_H
#define GRASSHARD_H

#include <stddef.h>
#include <stdint.h>

#if defined(GRASSHARD_BUILDING_LIBRARY)
#define GH_API __attribute__((visibility("default")))
#else
#define GH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns a status. On failure the message is available from
   gh_last_error() until the next call on the same thread. Strings returned
   through char** are owned by the caller and released with gh_string_free. */
typedef enum gh_status {
  GH_OK = 0,
  GH_ERR_INVALID_ARGUMENT = 1,
  GH_ERR_PARSE = 2,
  GH_ERR_IO = 3,
  GH_ERR_NUMERICAL = 4,
  GH_ERR_NOT_IMPLEMENTED = 5,
  GH_ERR_NO_PATH = 6,
  GH_ERR_INTERNAL = 7
} gh_status;

typedef struct gh_graph gh_graph;
typedef struct gh_instance gh_instance;
typedef struct gh_point gh_point;
typedef struct gh_report gh_report;

GH_API const char* gh_version(void);
GH_API const char* gh_status_string(gh_status status);
GH_API const char* gh_last_error(void);
GH_API void gh_string_free(char* s);

/* Graphs. Text input may be JSON {"n":..,"edges":[[i,j],..]} or the
   "n m" edge-list format; the first non-blank character decides. */
GH_API gh_status gh_graph_parse(const char* text, gh_graph** out);
GH_API gh_status gh_graph_generate(const char* family, int n, uint64_t p_num, uint64_t p_den,
                                   uint64_t seed, gh_graph** out);
GH_API gh_status gh_graph_to_json(const gh_graph* g, char** out);
GH_API gh_status gh_graph_to_edge_list(const gh_graph* g, char** out);
GH_API gh_status gh_graph_size(const gh_graph* g, int* n, size_t* edges);
GH_API gh_status gh_graph_clique_number(const gh_graph* g, int* out);
GH_API gh_status gh_graph_stability_number(const gh_graph* g, int* out);
GH_API void gh_graph_free(gh_graph* g);

/* Reductions from graphs: "clique-decision", "clique-number", "simplex-ms",
   "density" (k ignored), "nesterov" (k ignored, needs enable_nesterov). */
GH_API gh_status gh_reduce_graph(const char* reduction, const gh_graph* g, int k,
                                 int enable_nesterov, gh_instance** out);
/* Reductions from a JSON matrix (nested rows of rationals): "copositivity",
   "lp-stiefel", "lp-grassmann" (uses k), "lp-spd". */
GH_API gh_status gh_reduce_matrix(const char* reduction, const char* matrix_json, int k,
                                  gh_instance** out);
/* target: "stiefel", "orthogonal" (Grassmann instances) or
   "first-column-stiefel", "first-column-orthogonal" (sphere instances). */
GH_API gh_status gh_instance_pullback(const gh_instance* inst, const char* target, int k,
                                      gh_instance** out);
GH_API gh_status gh_instance_parse(const char* json, gh_instance** out);
GH_API gh_status gh_instance_to_json(const gh_instance* inst, char** out);
GH_API void gh_instance_free(gh_instance* inst);

/* Solvers. */
GH_API gh_status gh_solve_multistart(const gh_instance* inst, int starts, int iters, uint64_t seed,
                                     gh_report** out);
GH_API gh_status gh_solve_closed_form(const gh_instance* inst, gh_report** out);
GH_API gh_status gh_report_to_json(const gh_report* r, char** out);
GH_API gh_status gh_report_to_csv(const gh_report* r, char** out);
/* *infinite is set to 1 for an unbounded supremum, in which case *value is 0. */
GH_API gh_status gh_report_best_value(const gh_report* r, double* value, int* infinite);
GH_API void gh_report_free(gh_report* r);

/* Manifold points. a and b are rationals as text, or NULL when unused. */
GH_API gh_status gh_point_parse(const char* json, gh_point** out);
GH_API gh_status gh_point_random(const char* model, int n, int k, uint64_t seed, const char* a,
                                 const char* b, gh_point** out);
GH_API gh_status gh_point_to_json(const gh_point* p, char** out);
GH_API gh_status gh_point_validate(const gh_point* p, char** violations_json);
/* Routes through the map graph. steps_json receives the applied maps as a
   JSON array and may be NULL. */
GH_API gh_status gh_convert(const gh_point* p, const char* to_model, const char* a, const char* b,
                            gh_point** out, char** steps_json);
GH_API gh_status gh_same_coset(const gh_point* x, const gh_point* y, double tol, int* out);
GH_API gh_status gh_lift_diagonal(const double* d, int n, int k, gh_point** out);
GH_API void gh_point_free(gh_point* p);

/* Verification suites. */
GH_API gh_status gh_verify_suites(char** names_json);
GH_API gh_status gh_verify(const char* suite, uint64_t seed, int nmax, int starts, int iters,
                           int enable_nesterov, int* passed, char** summary_json);

#ifdef __cplusplus
}
#endif

#endif /* GRASSHARD_H */
