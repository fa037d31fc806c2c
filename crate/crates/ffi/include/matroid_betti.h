#ifndef MATROID_BETTI_H
#define MATROID_BETTI_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MbAlgorithm {
  MB_ALGORITHM_AUTO = 0,
  MB_ALGORITHM_HOCHSTER = 1,
  MB_ALGORITHM_BLOCKS = 2,
  MB_ALGORITHM_CACTUS = 3,
} MbAlgorithm;

typedef enum MbStatus {
  MB_STATUS_OK = 0,
  /**
   * Malformed or out-of-range input.
   */
  MB_STATUS_INVALID_INPUT = 1,
  /**
   * Well-formed input outside the domain of the operation (not a cactus, zero ideal, ...).
   */
  MB_STATUS_CONTRACT = 2,
  MB_STATUS_NULL_POINTER = 3,
  MB_STATUS_BUFFER_TOO_SMALL = 4,
  /**
   * A Rust panic was caught at the boundary.
   */
  MB_STATUS_INTERNAL = 5,
} MbStatus;

/**
 * Opaque Betti table handle.
 */
typedef struct MbBettiTable MbBettiTable;

/**
 * Opaque matroid handle.
 */
typedef struct MbMatroid MbMatroid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null if none. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *mb_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *mb_version(void);

/**
 * Builds a matroid from a JSON document (tagged matroid or bare graph).
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum MbStatus mb_matroid_from_json(const char *json, struct MbMatroid **out);

/**
 * Cycle matroid of a named fixture graph (`"g1"` .. `"g4"`).
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum MbStatus mb_matroid_fixture(const char *name, struct MbMatroid **out);

/**
 * Uniform matroid `U(r, n)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum MbStatus mb_matroid_uniform(size_t r, size_t n, struct MbMatroid **out);

/**
 * # Safety
 * `m` must be null or a handle from this library that has not been freed.
 */
void mb_matroid_free(struct MbMatroid *m);

/**
 * Ground set size, or 0 for a null handle.
 *
 * # Safety
 * `m` must be null or a live handle.
 */
size_t mb_matroid_size(const struct MbMatroid *m);

/**
 * Rank of the ground set, or 0 for a null handle.
 *
 * # Safety
 * `m` must be null or a live handle.
 */
size_t mb_matroid_rank(const struct MbMatroid *m);

/**
 * Graded Betti numbers of the facet ideal over `GF(field)`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum MbStatus mb_betti(const struct MbMatroid *m,
                       enum MbAlgorithm algorithm,
                       uint32_t field,
                       struct MbBettiTable **out);

/**
 * Closed-form table of a cactus with the given cycle lengths (1 = loop).
 *
 * # Safety
 * `lengths` must point to `len` values (or be null with `len == 0`); `out` must be writable.
 */
enum MbStatus mb_cactus_betti(const uint64_t *lengths, size_t len, struct MbBettiTable **out);

/**
 * # Safety
 * `t` must be null or a handle from this library that has not been freed.
 */
void mb_betti_free(struct MbBettiTable *t);

/**
 * Degree of the minimal generators, i.e. the matroid rank.
 *
 * # Safety
 * `t` must be null or a live handle.
 */
size_t mb_betti_rank(const struct MbBettiTable *t);

/**
 * Copies the global Betti numbers `β_0, β_1, ..` into `buf`.
 *
 * # Safety
 * `t` must be a live handle; `buf` must hold `cap` values; `out_len` must be writable.
 */
enum MbStatus mb_betti_global(const struct MbBettiTable *t,
                              uint64_t *buf,
                              size_t cap,
                              size_t *out_len);

/**
 * `β_{i,j}`, or 0 outside the table.
 *
 * # Safety
 * `t` must be null or a live handle.
 */
uint64_t mb_betti_get(const struct MbBettiTable *t, size_t i, size_t j);

/**
 * JSON rendering of the table. Release with [`mb_string_free`].
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum MbStatus mb_betti_to_json(const struct MbBettiTable *t, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library that has not been freed.
 */
void mb_string_free(char *s);

/**
 * Higher weight hierarchy `d_1 < d_2 < ..` into `buf`.
 *
 * # Safety
 * `m` must be a live handle; `buf` must hold `cap` values; `out_len` must be writable.
 */
enum MbStatus mb_weights(const struct MbMatroid *m, size_t *buf, size_t cap, size_t *out_len);

/**
 * Minimum circuit size of the dual matroid.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum MbStatus mb_dual_d1(const struct MbMatroid *m, size_t *out);

/**
 * Recovers sorted cycle lengths from a cactus global Betti vector; `loops` of the
 * recovered lengths are 1.
 *
 * # Safety
 * `global` must point to `len` values; `buf` must hold `cap` values; `out_len` must be writable.
 */
enum MbStatus mb_invert_cactus(const uint64_t *global,
                               size_t len,
                               size_t loops,
                               uint64_t *buf,
                               size_t cap,
                               size_t *out_len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MATROID_BETTI_H */
