#ifndef PANTS_ARCS_H
#define PANTS_ARCS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. Zero is success.
 */
typedef enum PaStatus {
  PA_STATUS_OK = 0,
  PA_STATUS_NULL_POINTER = 1,
  PA_STATUS_INVALID_UTF8 = 2,
  PA_STATUS_MALFORMED_TOKEN = 3,
  PA_STATUS_BAD_SHAPE = 4,
  PA_STATUS_FORBIDDEN_PAIR = 5,
  PA_STATUS_NON_REDUCED = 6,
  PA_STATUS_ENDPOINT_CLASH = 7,
  PA_STATUS_BAD_PARAMS = 8,
  PA_STATUS_UNKNOWN_FAMILY = 9,
  PA_STATUS_INTERNAL = 10,
} PaStatus;

/**
 * Opaque word handle.
 */
typedef struct PaArcWord PaArcWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never free the result.
 */
const char *pa_status_message(enum PaStatus status);

/**
 * Parses `text`. On a grammar error `*error_position` (if not null)
 * receives the 0-based offending character offset.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be writable.
 */
enum PaStatus pa_word_parse(const char *text, struct PaArcWord **out, size_t *error_position);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `word` must come from this library and not be freed twice.
 */
void pa_word_free(struct PaArcWord *word);

/**
 * Total number of letters, or 0 for a null handle.
 *
 * # Safety
 * `word` must be null or a live handle.
 */
size_t pa_word_length(const struct PaArcWord *word);

/**
 * Text form; release with `pa_string_free`. Null for a null handle.
 *
 * # Safety
 * `word` must be null or a live handle.
 */
char *pa_word_to_string(const struct PaArcWord *word);

/**
 * # Safety
 * `s` must be null or come from `pa_word_to_string`.
 */
void pa_string_free(char *s);

/**
 * # Safety
 * `word` must be a live handle; `out` must be writable.
 */
enum PaStatus pa_self_intersection(const struct PaArcWord *word, uint64_t *out);

/**
 * The same arc traversed backwards, as a new handle.
 *
 * # Safety
 * `word` must be a live handle; `out` must be writable.
 */
enum PaStatus pa_word_inverse(const struct PaArcWord *word, struct PaArcWord **out);

/**
 * Image under `a <-> b`, `1 <-> 2`, as a new handle.
 *
 * # Safety
 * `word` must be a live handle; `out` must be writable.
 */
enum PaStatus pa_word_relabel(const struct PaArcWord *word, struct PaArcWord **out);

/**
 * A lower-case word of the same shape with no more self-intersections.
 *
 * # Safety
 * `word` must be a live handle; `out` must be writable.
 */
enum PaStatus pa_word_positivize(const struct PaArcWord *word, struct PaArcWord **out);

/**
 * Family member `id` (e.g. "Z2") with parameters `n` and, when `has_m`, `m`.
 * `*predicted` (if not null) receives the closed-form value.
 *
 * # Safety
 * `id` must be a NUL-terminated string; `out` must be writable.
 */
enum PaStatus pa_family_word(const char *id,
                             uint32_t n,
                             uint32_t m,
                             bool has_m,
                             struct PaArcWord **out,
                             uint64_t *predicted);

/**
 * A 2-low-lying word with exactly `n` self-intersections.
 *
 * # Safety
 * `out` must be writable.
 */
enum PaStatus pa_witness(uint64_t n, struct PaArcWord **out);

/**
 * Word count and self-intersection range over all words of a length.
 * `jobs` of 0 uses every logical CPU.
 *
 * # Safety
 * The three output pointers must be writable.
 */
enum PaStatus pa_census(size_t word_length,
                        size_t jobs,
                        uint64_t *word_count,
                        uint64_t *min_i,
                        uint64_t *max_i);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PANTS_ARCS_H */
