/* C interface to the hypermatch balanced-hypergraph library. */

#ifndef HYPERMATCH_H
#define HYPERMATCH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; every entry point returns one.
 */
typedef enum HmStatus {
  HM_STATUS_OK = 0,
  HM_STATUS_NULL_ARGUMENT = 1,
  HM_STATUS_INVALID_UTF8 = 2,
  HM_STATUS_PARSE_ERROR = 3,
  HM_STATUS_INVALID_INPUT = 4,
  HM_STATUS_NOT_BALANCED = 5,
  HM_STATUS_TOO_LARGE = 6,
  HM_STATUS_UNKNOWN_COMMAND = 7,
} HmStatus;

/**
 * Weight presets for the matching and cover numbers.
 */
typedef enum HmWeights {
  HM_WEIGHTS_EDGE_COUNT = 0,
  HM_WEIGHTS_VERTEX_COUNT = 1,
} HmWeights;

/**
 * Opaque hypergraph handle.
 */
typedef struct HmHypergraph HmHypergraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * # Safety
 * `text` must be a valid NUL-terminated C string and `out` a valid pointer.
 */
enum HmStatus hm_hypergraph_parse(const char *text, struct HmHypergraph **out);

/**
 * # Safety
 * `handle` must come from `hm_hypergraph_parse` and not be freed twice.
 */
void hm_hypergraph_free(struct HmHypergraph *handle);

/**
 * Vertex count; zero for a null handle.
 *
 * # Safety
 * `handle` must be null or a live handle.
 */
uint32_t hm_vertex_count(const struct HmHypergraph *handle);

/**
 * Edge count; zero for a null handle.
 *
 * # Safety
 * `handle` must be null or a live handle.
 */
uint32_t hm_edge_count(const struct HmHypergraph *handle);

/**
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum HmStatus hm_is_balanced(const struct HmHypergraph *handle, uint64_t max_states, bool *out);

/**
 * d-maximum matching weight under a weight preset.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum HmStatus hm_matching_number(const struct HmHypergraph *handle,
                                 enum HmWeights weights,
                                 uint64_t max_states,
                                 uint64_t *out);

/**
 * Minimum integer d-vertex cover weight under a weight preset.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum HmStatus hm_cover_number(const struct HmHypergraph *handle,
                              enum HmWeights weights,
                              uint64_t max_states,
                              uint64_t *out);

/**
 * Number of colors of a proper edge coloring in at most Δ colors; fails
 * with `HM_STATUS_NOT_BALANCED` on unbalanced inputs.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum HmStatus hm_edge_coloring_size(const struct HmHypergraph *handle,
                                    uint64_t max_states,
                                    uint32_t *out);

/**
 * Runs a named analysis and returns its canonical JSON report. Commands:
 * `check-balance`, `match`, `cover`, `konig` (argument `E`/`V`),
 * `color`, `decompose` (argument `dpm`/`fqn`/`classic`), `verify`
 * (argument `galed2`/`galed1`/`equalities`), `charac` (argument
 * `D`/`weighted`/`stable`). Pass null for no argument.
 *
 * # Safety
 * `handle` must be a live handle, `command` a valid C string, `arg` null or
 * a valid C string, `out_json` a valid pointer. The result must be released
 * with `hm_string_free`.
 */
enum HmStatus hm_report_json(const struct HmHypergraph *handle,
                             const char *command,
                             const char *arg,
                             uint64_t max_states,
                             char **out_json);

/**
 * # Safety
 * `text` must come from this library and not be freed twice.
 */
void hm_string_free(char *text);

/**
 * Library version as a static string; do not free.
 */
const char *hm_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERMATCH_H */
