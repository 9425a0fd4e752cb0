#ifndef ALPHACUT_H
#define ALPHACUT_H

/* Generated by cbindgen from alphacut-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which quantity to attack.
 */
typedef enum AlphacutProblem {
  ALPHACUT_PROBLEM_TRANSVERSAL = 0,
  ALPHACUT_PROBLEM_BLOCKER = 1,
} AlphacutProblem;

/**
 * Status codes returned by every fallible function.
 */
typedef enum AlphacutStatus {
  ALPHACUT_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  ALPHACUT_STATUS_NULL_ARGUMENT = 1,
  /**
   * Input text was not valid UTF-8.
   */
  ALPHACUT_STATUS_INVALID_UTF8 = 2,
  /**
   * The edge-list text failed to parse.
   */
  ALPHACUT_STATUS_PARSE_ERROR = 3,
  /**
   * The graph (or, in clique mode, its complement) is not a
   * co-comparability graph.
   */
  ALPHACUT_STATUS_NOT_COCOMPARABILITY = 4,
  /**
   * The threshold d must be at least 1.
   */
  ALPHACUT_STATUS_INVALID_THRESHOLD = 5,
  /**
   * A vertex id was out of range for the graph.
   */
  ALPHACUT_STATUS_VERTEX_OUT_OF_RANGE = 6,
  /**
   * Unexpected internal failure.
   */
  ALPHACUT_STATUS_INTERNAL = 7,
} AlphacutStatus;

/**
 * Opaque graph handle.
 */
typedef struct AlphacutGraph AlphacutGraph;

/**
 * Opaque solution handle.
 */
typedef struct AlphacutSolution AlphacutSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *alphacut_last_error_message(void);

/**
 * Parses edge-list text ("n m" header, one "u v" line per edge) into a new
 * graph handle. The handle must be released with [`alphacut_graph_free`].
 *
 * # Safety
 * `text` must point to a NUL-terminated string and `out_graph` to writable
 * storage for one pointer; both stay borrowed only for the call.
 */
enum AlphacutStatus alphacut_graph_parse(const char *text, struct AlphacutGraph **out_graph);

/**
 * Releases a graph handle. Null is ignored.
 *
 * # Safety
 * `graph` must be null or a handle from [`alphacut_graph_parse`] that has
 * not been freed; it must not be used afterwards.
 */
void alphacut_graph_free(struct AlphacutGraph *graph);

/**
 * Number of vertices; 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle from [`alphacut_graph_parse`].
 */
size_t alphacut_graph_vertex_count(const struct AlphacutGraph *graph);

/**
 * Number of edges; 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle from [`alphacut_graph_parse`].
 */
size_t alphacut_graph_edge_count(const struct AlphacutGraph *graph);

/**
 * Solves for a minimum d-transversal or d-deletion blocker. Thresholds
 * above the independence number yield an infeasible solution handle, not an
 * error. The handle must be released with [`alphacut_solution_free`].
 *
 * # Safety
 * `graph` must be null or a live graph handle and `out_solution` null or
 * writable storage for one pointer.
 */
enum AlphacutStatus alphacut_solve(const struct AlphacutGraph *graph,
                                   enum AlphacutProblem problem,
                                   size_t d,
                                   struct AlphacutSolution **out_solution);

/**
 * Like [`alphacut_solve`] but on the complement, answering the maximum
 * clique variants; the solution's alpha is then the clique number.
 *
 * # Safety
 * Same contract as [`alphacut_solve`].
 */
enum AlphacutStatus alphacut_solve_clique(const struct AlphacutGraph *graph,
                                          enum AlphacutProblem problem,
                                          size_t d,
                                          struct AlphacutSolution **out_solution);

/**
 * Checks a claimed solution. Writes the verdict to `out_valid`.
 *
 * # Safety
 * `graph` must be a live graph handle or null, `vertices` must point to
 * `vertex_count` readable ids (null only when the count is 0), and
 * `out_valid` must be writable or null.
 */
enum AlphacutStatus alphacut_verify(const struct AlphacutGraph *graph,
                                    enum AlphacutProblem problem,
                                    size_t d,
                                    const size_t *vertices,
                                    size_t vertex_count,
                                    bool *out_valid);

/**
 * Releases a solution handle. Null is ignored.
 *
 * # Safety
 * `solution` must be null or an unfreed handle from a solve call; it must
 * not be used afterwards.
 */
void alphacut_solution_free(struct AlphacutSolution *solution);

/**
 * False when no solution exists for the requested threshold.
 *
 * # Safety
 * `solution` must be null or a live handle from a solve call.
 */
bool alphacut_solution_feasible(const struct AlphacutSolution *solution);

/**
 * Independence number of the solved graph (clique number in clique mode).
 *
 * # Safety
 * `solution` must be null or a live handle from a solve call.
 */
size_t alphacut_solution_alpha(const struct AlphacutSolution *solution);

/**
 * Optimal size; 0 when infeasible, so check feasibility first.
 *
 * # Safety
 * `solution` must be null or a live handle from a solve call.
 */
size_t alphacut_solution_min_size(const struct AlphacutSolution *solution);

/**
 * Number of vertices in the optimal set.
 *
 * # Safety
 * `solution` must be null or a live handle from a solve call.
 */
size_t alphacut_solution_vertex_count(const struct AlphacutSolution *solution);

/**
 * Copies up to `capacity` solution vertices (sorted, 0-based) into `buffer`
 * and returns how many were written. Call with the count from
 * [`alphacut_solution_vertex_count`] to get all of them.
 *
 * # Safety
 * `solution` must be null or a live handle, and `buffer` must have room
 * for `capacity` values unless it is null.
 */
size_t alphacut_solution_vertices(const struct AlphacutSolution *solution,
                                  size_t *buffer,
                                  size_t capacity);

/**
 * Serializes the solution as one JSON object. The returned string must be
 * released with [`alphacut_string_free`]; null on a null handle.
 *
 * # Safety
 * `solution` must be null or a live handle from a solve call.
 */
char *alphacut_solution_to_json(const struct AlphacutSolution *solution);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library that has not been
 * freed.
 */
void alphacut_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ALPHACUT_H */
