#ifndef TMCOUNT_H
#define TMCOUNT_H

/* Generated by cbindgen from crates/ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a C API call.
 */
typedef enum TmStatus {
  /**
   * Success.
   */
  TM_STATUS_OK = 0,
  /**
   * Input outside an operation's domain.
   */
  TM_STATUS_DOMAIN_ERROR = 1,
  /**
   * Malformed graph text or builder spec.
   */
  TM_STATUS_PARSE_ERROR = 2,
  /**
   * A required pointer argument was null.
   */
  TM_STATUS_NULL_ARGUMENT = 3,
  /**
   * A string argument was not valid UTF-8.
   */
  TM_STATUS_INVALID_UTF8 = 4,
} TmStatus;

/**
 * Opaque graph handle.
 */
typedef struct TmGraph TmGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or an empty string.
 * The result must be released with `tm_string_free`.
 */
char *tm_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must have been returned by a `tmcount` function and not yet freed.
 */
void tm_string_free(char *s);

/**
 * Builds a named graph, e.g. `"antiprism:5"`, `"circulant:8:1,3"`,
 * `"complete:4"`, `"gaze"`, `"cell24"`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum TmStatus tm_graph_build(const char *spec, struct TmGraph **out);

/**
 * Parses edge-list text: a `directed <n>` / `undirected <n>` header line,
 * then one `u v` edge per line.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum TmStatus tm_graph_from_edge_list(const char *text, struct TmGraph **out);

/**
 * Renders the graph back to edge-list text.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be a valid pointer.
 */
enum TmStatus tm_graph_to_edge_list(const struct TmGraph *g, char **out);

/**
 * Number of nodes, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t tm_graph_node_count(const struct TmGraph *g);

/**
 * Releases a graph handle. Null is ignored.
 *
 * # Safety
 * `g` must have been returned by a graph constructor and not yet freed.
 */
void tm_graph_free(struct TmGraph *g);

/**
 * Number of walks of length `length` from node `from` to node `to`,
 * as a decimal string.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be a valid pointer.
 */
enum TmStatus tm_count_walks(const struct TmGraph *g,
                             uint64_t length,
                             size_t from,
                             size_t to,
                             char **out);

/**
 * Number of closed walks of length `length` (trace of the matrix power).
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be a valid pointer.
 */
enum TmStatus tm_count_closed_walks(const struct TmGraph *g, uint64_t length, char **out);

/**
 * Number of Hamiltonian paths; `undirected` halves the directed count.
 * `workers` threads share the subset sum (0 behaves like 1); the result
 * never depends on the worker count.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be a valid pointer.
 */
enum TmStatus tm_hamiltonian_paths(const struct TmGraph *g,
                                   bool undirected,
                                   uint32_t workers,
                                   char **out);

/**
 * Number of Hamiltonian cycles; see `tm_hamiltonian_paths`.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be a valid pointer.
 */
enum TmStatus tm_hamiltonian_cycles(const struct TmGraph *g,
                                    bool undirected,
                                    uint32_t workers,
                                    char **out);

/**
 * Number of simple paths of length `k`; see `tm_hamiltonian_paths`.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be a valid pointer.
 */
enum TmStatus tm_simple_paths(const struct TmGraph *g,
                              uint64_t k,
                              bool undirected,
                              uint32_t workers,
                              char **out);

/**
 * Number of simple cycles of length `k`; see `tm_hamiltonian_paths`.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be a valid pointer.
 */
enum TmStatus tm_simple_cycles(const struct TmGraph *g,
                               uint64_t k,
                               bool undirected,
                               uint32_t workers,
                               char **out);

/**
 * t_n: silent prisms of n partnered pairs (formal trace value for n < 3).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TmStatus tm_silent_prism(uint64_t n, char **out);

/**
 * s_n: silent circles of 2n people (defined for n >= 2).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TmStatus tm_silent_circle(uint64_t n, char **out);

/**
 * h_n: directed Hamiltonian cycles in the n-antiprism (n >= 3).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TmStatus tm_antiprism_hc(uint64_t n, char **out);

/**
 * Canonical text of the closed-walk generating function of the graph,
 * e.g. `(4 - 3*z - z^3) / (1 - z - z^3)`.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be a valid pointer.
 */
enum TmStatus tm_trace_gf(const struct TmGraph *g, char **out);

/**
 * Largest real root of the polynomial with the given ascending `coeffs`
 * (machine integers suffice at this boundary), found in `[0, cauchy
 * bound]` to within `tol`.
 *
 * # Safety
 * `coeffs` must point to `len` readable values; `out` must be valid.
 */
enum TmStatus tm_largest_real_root(const int64_t *coeffs, size_t len, double tol, double *out);

/**
 * The silence growth constants: alpha (largest root of the reversed
 * prism-series denominator) and alpha/9.
 *
 * # Safety
 * `alpha` and `ratio` must be null or valid pointers.
 */
enum TmStatus tm_growth_constant(double *alpha, double *ratio);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TMCOUNT_H */
