#ifndef ABELIAN_CODES_H
#define ABELIAN_CODES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum {
  // The call succeeded and the out parameters are valid.
  AC_STATUS_OK = 0,
  // A required pointer argument was null.
  AC_STATUS_NULL_ARGUMENT = 1,
  // q is not a prime power, or some r_j is zero or shares a factor with q.
  AC_STATUS_INVALID_SHAPE = 2,
  // An argument is outside its domain.
  AC_STATUS_INVALID_ARGUMENT = 3,
  // The defining set is not a union of q-orbits.
  AC_STATUS_NOT_ORBIT_CLOSED = 4,
  // The defining set covers the whole index set, so the code is zero.
  AC_STATUS_ZERO_CODE = 5,
  // The requested computation exceeds the given enumeration budget.
  AC_STATUS_BUDGET_EXCEEDED = 6,
  // An internal invariant failed; please report the inputs.
  AC_STATUS_INTERNAL_ERROR = 7,
} AcStatus;

// An abelian code over its ambient algebra; opaque to C callers.
typedef struct AcCode AcCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a code from its shape and the orbit representatives of its
// defining set. `r` points to `r_len` coordinate orders; `orbit_reps`
// points to `rep_count * r_len` values, one row of `r_len` coordinates per
// representative. On success `*out` owns the new handle.
//
// # Safety
// `r` must be valid for `r_len` reads, `orbit_reps` for
// `rep_count * r_len` reads (it may be null when `rep_count` is zero), and
// `out` must be valid for a write.
AcStatus ac_code_new(uint64_t q,
                     const uint32_t *r,
                     size_t r_len,
                     const uint32_t *orbit_reps,
                     size_t rep_count,
                     AcCode **out);

// Releases a handle returned by `ac_code_new` or `ac_multiply_dimension`.
// Passing null is a no-op.
//
// # Safety
// `code` must be null or a handle from this library that has not been
// freed yet.
void ac_code_free(AcCode *code);

// Writes the code length (the size of the index set) to `*out`.
//
// # Safety
// `code` must be a live handle and `out` valid for a write.
AcStatus ac_code_length(const AcCode *code, size_t *out);

// Writes the code dimension to `*out`.
//
// # Safety
// `code` must be a live handle and `out` valid for a write.
AcStatus ac_code_dimension(const AcCode *code, size_t *out);

// Writes the number of defining-set orbit representatives to `*out`. Each
// representative occupies as many values as there are coordinate orders.
//
// # Safety
// `code` must be a live handle and `out` valid for a write.
AcStatus ac_code_defining_set_len(const AcCode *code, size_t *out);

// Copies the defining-set orbit representatives, sorted and flattened row
// by row, into `buf`. Writes the number of u32 values copied to
// `*written`; fails with `InvalidArgument` when `cap` is too small.
//
// # Safety
// `code` must be a live handle, `buf` valid for `cap` writes and
// `written` for one write.
AcStatus ac_code_defining_set(const AcCode *code, uint32_t *buf, size_t cap, size_t *written);

// Apparent distance with respect to the reference root, written to `*out`.
//
// # Safety
// `code` must be a live handle and `out` valid for a write.
AcStatus ac_apparent_distance_alpha(const AcCode *code, uint64_t *out);

// Apparent distance of the code, the maximum over all root classes,
// written to `*out`.
//
// # Safety
// `code` must be a live handle and `out` valid for a write.
AcStatus ac_apparent_distance(const AcCode *code, uint64_t *out);

// Multivariate BCH bound of the code, written to `*out`.
//
// # Safety
// `code` must be a live handle and `out` valid for a write.
AcStatus ac_bch_bound(const AcCode *code, uint64_t *out);

// Brute-force minimum distance, enumerating at most `budget` codewords;
// requires a prime q. Written to `*out`.
//
// # Safety
// `code` must be a live handle and `out` valid for a write.
AcStatus ac_min_distance(const AcCode *code, uint64_t budget, uint64_t *out);

// Extends a cyclic code to `n` times its dimension at the same apparent
// distance. On success `*out` owns a new handle.
//
// # Safety
// `code` must be a live handle and `out` valid for a write.
AcStatus ac_multiply_dimension(const AcCode *code, uint32_t n, AcCode **out);

// A static, null-terminated description of a status code.
const char *ac_status_message(AcStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ABELIAN_CODES_H */
