#ifndef JSHARP_H
#define JSHARP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which structural set to copy out.
 */
typedef enum JsSet {
  JS_SET_UNITS = 0,
  JS_SET_IDEMPOTENTS = 1,
  JS_SET_NILPOTENTS = 2,
  JS_SET_JACOBSON = 3,
  JS_SET_J_SHARP = 4,
  JS_SET_QUASI_NILPOTENTS = 5,
  JS_SET_DELTA_NILPOTENTS = 6,
} JsSet;

typedef enum JsStatus {
  JS_STATUS_OK = 0,
  JS_STATUS_NULL_POINTER = 1,
  JS_STATUS_INVALID_UTF8 = 2,
  JS_STATUS_PARSE_ERROR = 3,
  JS_STATUS_AXIOM_VIOLATION = 4,
  JS_STATUS_MALFORMED_TABLE = 5,
  JS_STATUS_SIZE_EXCEEDED = 6,
  JS_STATUS_OUT_OF_RANGE = 7,
  JS_STATUS_BUFFER_TOO_SMALL = 8,
  JS_STATUS_UNKNOWN_CHECK = 9,
  JS_STATUS_INVALID_ARGUMENT = 10,
  JS_STATUS_PANIC = 11,
} JsStatus;

/**
 * Opaque ring handle.
 */
typedef struct JsRing JsRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *jsharp_last_error_message(void);

/**
 * Set the largest order any construction may produce.
 */
void jsharp_set_order_cap(size_t cap);

/**
 * Build a ring from a construction expression such as `"K(Z4,2)"`.
 *
 * # Safety
 * `expr` must be a nul-terminated string and `out` a valid pointer.
 */
enum JsStatus jsharp_ring_parse(const char *expr, struct JsRing **out);

/**
 * Build and validate a ring from row-major `order × order` tables.
 *
 * # Safety
 * `add` and `mul` must each point to `order * order` readable values and
 * `out` must be valid.
 */
enum JsStatus jsharp_ring_from_tables(size_t order,
                                      const size_t *add,
                                      const size_t *mul,
                                      size_t zero,
                                      size_t one,
                                      struct JsRing **out);

/**
 * Release a handle. Null is ignored.
 *
 * # Safety
 * `ring` must come from this library and not be used afterwards.
 */
void jsharp_ring_free(struct JsRing *ring);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `ring` must be null or a live handle.
 */
size_t jsharp_ring_order(const struct JsRing *ring);

/**
 * Copy a structural set as ascending indices. `*len` receives the set size
 * even when `capacity` is too small (then `BufferTooSmall` is returned and
 * nothing is written). `buf` may be null when `capacity` is 0.
 *
 * # Safety
 * `buf` must have room for `capacity` values; `len` must be valid.
 */
enum JsStatus jsharp_ring_structural_set(const struct JsRing *ring,
                                         enum JsSet which,
                                         size_t *buf,
                                         size_t capacity,
                                         size_t *len);

/**
 * Whether every element is strongly J#-clean.
 *
 * # Safety
 * `ring` must be a live handle and `out` valid.
 */
enum JsStatus jsharp_ring_is_strongly_jsharp_clean(const struct JsRing *ring, bool *out);

/**
 * Whether element `index` admits a decomposition of the named kind, e.g.
 * `"strongly-jsharp-clean"`.
 *
 * # Safety
 * `ring` must be a live handle, `kind` a nul-terminated string, `out` valid.
 */
enum JsStatus jsharp_element_is_of_kind(const struct JsRing *ring,
                                        size_t index,
                                        const char *kind,
                                        bool *out);

/**
 * Classification report as a JSON object.
 *
 * # Safety
 * `ring` must be a live handle and `out` valid.
 */
enum JsStatus jsharp_ring_classify_json(const struct JsRing *ring, char **out);

/**
 * Run one named check on the ring an expression describes; the result is a
 * JSON object. A failing check still returns `Ok`; inspect `"status"`.
 *
 * # Safety
 * `check_id` and `expr` must be nul-terminated strings and `out` valid.
 */
enum JsStatus jsharp_run_check(const char *check_id, const char *expr, char **out);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void jsharp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* JSHARP_H */
