#ifndef CONTADJ_H
#define CONTADJ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum ContadjStatus {
  CONTADJ_STATUS_OK = 0,
  CONTADJ_STATUS_NULL_POINTER = 1,
  CONTADJ_STATUS_INVALID_UTF8 = 2,
  // Malformed JSON, unknown labels, bad mappings.
  CONTADJ_STATUS_INVALID_INPUT = 3,
  // The family of closed sets violates a topology axiom.
  CONTADJ_STATUS_INVALID_SPACE = 4,
  CONTADJ_STATUS_ARITY_MISMATCH = 5,
  CONTADJ_STATUS_UNSUPPORTED_SIZE = 6,
  CONTADJ_STATUS_NOT_CLOSED = 7,
  CONTADJ_STATUS_SPACE_MISMATCH = 8,
  // Caller-provided buffer is too small; the required length is reported.
  CONTADJ_STATUS_BUFFER_TOO_SMALL = 9,
  // A theorem cross-check failed.
  CONTADJ_STATUS_VIOLATION = 10,
  CONTADJ_STATUS_INTERNAL = 99,
} ContadjStatus;

// Opaque handle to a set function between two spaces.
typedef struct ContadjFunction ContadjFunction;

// Opaque handle to a finite topological space.
typedef struct ContadjSpace ContadjSpace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Why the most recent fallible call on this thread failed, or an empty
// string if it succeeded. The pointer stays valid until the next `contadj_*`
// call on the same thread.
const char *contadj_last_error_message(void);

// Build a space on `point_count` points from `len` closed-set masks.
//
// # Safety
// `closed` must point to `len` readable masks (or be null when `len` is 0);
// `out` must be writable.
enum ContadjStatus contadj_space_new(size_t point_count,
                                     const uint64_t *closed,
                                     size_t len,
                                     struct ContadjSpace **out);

// Build a space from its open sets.
//
// # Safety
// Same as [`contadj_space_new`].
enum ContadjStatus contadj_space_from_open(size_t point_count,
                                           const uint64_t *open,
                                           size_t len,
                                           struct ContadjSpace **out);

// Parse a space JSON document (`points` plus `closed_sets` or `open_sets`).
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum ContadjStatus contadj_space_from_json(const char *json, struct ContadjSpace **out);

// Release a space. Null is ignored.
//
// # Safety
// `space` must come from this library and not be freed twice.
void contadj_space_free(struct ContadjSpace *space);

// Number of points; 0 for null.
//
// # Safety
// `space` must be null or a live handle.
size_t contadj_space_point_count(const struct ContadjSpace *space);

// Number of closed sets; 0 for null.
//
// # Safety
// `space` must be null or a live handle.
size_t contadj_space_closed_count(const struct ContadjSpace *space);

// Copy the closed sets, ascending, into `buf`. `out_len` receives the
// number of closed sets even when `capacity` is too small.
//
// # Safety
// `buf` must have room for `capacity` masks; `out_len` must be writable.
enum ContadjStatus contadj_space_closed_sets(const struct ContadjSpace *space,
                                             uint64_t *buf,
                                             size_t capacity,
                                             size_t *out_len);

// Closure of `mask`.
//
// # Safety
// `space` must be a live handle; `out` must be writable.
enum ContadjStatus contadj_space_closure(const struct ContadjSpace *space,
                                         uint64_t mask,
                                         uint64_t *out);

// # Safety
// `space` must be a live handle; `out` must be writable.
enum ContadjStatus contadj_space_is_closed(const struct ContadjSpace *space,
                                           uint64_t mask,
                                           bool *out);

// Number of topologies on `point_count` labeled points (`point_count <= 4`).
//
// # Safety
// `out` must be writable.
enum ContadjStatus contadj_enumerate_spaces_count(size_t point_count, size_t *out);

// Build `φ: domain -> codomain` with `mapping[p]` the image of point `p`.
// Both spaces are shared, not consumed.
//
// # Safety
// Handles must be live; `mapping` must point to `len` readable values.
enum ContadjStatus contadj_function_new(const struct ContadjSpace *domain,
                                        const struct ContadjSpace *codomain,
                                        const size_t *mapping,
                                        size_t len,
                                        struct ContadjFunction **out);

// Parse a function JSON document (`domain`, `codomain`, `map`).
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum ContadjStatus contadj_function_from_json(const char *json, struct ContadjFunction **out);

// Release a function. Null is ignored.
//
// # Safety
// `function` must come from this library and not be freed twice.
void contadj_function_free(struct ContadjFunction *function);

// Continuity verdict. When discontinuous, `out_witness` receives the
// smallest closed set whose preimage is not closed; otherwise 0.
//
// # Safety
// `function` must be live; outputs must be writable.
enum ContadjStatus contadj_function_is_continuous(const struct ContadjFunction *function,
                                                  bool *out_continuous,
                                                  uint64_t *out_witness);

// Adjointness of the induced pair `(T_φ, T^φ)`. When not adjoint,
// `(out_u, out_v)` is the smallest violating pair; otherwise both are 0.
//
// # Safety
// `function` must be live; outputs must be writable.
enum ContadjStatus contadj_function_is_adjoint(const struct ContadjFunction *function,
                                               bool *out_adjoint,
                                               uint64_t *out_u,
                                               uint64_t *out_v);

// Full theorem report as a JSON string. Free it with
// [`contadj_string_free`].
//
// # Safety
// `function` must be live; `out_json` must be writable.
enum ContadjStatus contadj_function_verify_json(const struct ContadjFunction *function,
                                                char **out_json);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void contadj_string_free(char *s);

// Run the exhaustive campaign. `max_points` is 1..=3, or 4 when
// `include_four` is set.
//
// # Safety
// Outputs must be writable.
enum ContadjStatus contadj_campaign_run(size_t max_points,
                                        bool include_four,
                                        uint64_t *out_functions,
                                        uint64_t *out_continuous,
                                        uint64_t *out_mismatches);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONTADJ_H */
