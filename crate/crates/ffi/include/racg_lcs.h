#ifndef RACG_LCS_H
#define RACG_LCS_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum RacgStatus {
  RACG_STATUS_OK = 0,
  RACG_STATUS_NULL_POINTER = 1,
  RACG_STATUS_INVALID_INPUT = 2,
  RACG_STATUS_CAP_EXCEEDED = 3,
  RACG_STATUS_CHECK_FAILED = 4,
  RACG_STATUS_BUFFER_TOO_SMALL = 5,
  RACG_STATUS_INTERNAL = 6,
  RACG_STATUS_PANIC = 7,
} RacgStatus;

/**
 * Opaque simplicial complex.
 */
typedef struct RacgComplex RacgComplex;

/**
 * Opaque nilpotent quotient of a right-angled Coxeter group.
 */
typedef struct RacgPc RacgPc;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the calling thread's last error message (NUL-terminated,
 * truncated to fit) into `buf`. Returns the full message length.
 *
 * # Safety
 * `buf` must be null or point to `cap` writable bytes.
 */
size_t racg_last_error_message(char *buf, size_t cap);

/**
 * Parses a complex from JSON such as `{"m": 3, "faces": [[1,2]]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum RacgStatus racg_complex_from_json(const char *json, struct RacgComplex **out);

/**
 * Flag complex on `[m]` of a graph; `edges` holds `2 * n_edges` 1-based
 * vertex indices.
 *
 * # Safety
 * `edges` must point to `2 * n_edges` values (or be null when `n_edges` is 0).
 */
enum RacgStatus racg_complex_flag(size_t m,
                                  const uint32_t *edges,
                                  size_t n_edges,
                                  struct RacgComplex **out);

/**
 * Releases a complex. Null is ignored.
 *
 * # Safety
 * `k` must come from this API and not be used afterwards.
 */
void racg_complex_free(struct RacgComplex *k);

/**
 * Number of vertices.
 *
 * # Safety
 * `k` must be a live handle; `out` writable.
 */
enum RacgStatus racg_complex_vertex_count(const struct RacgComplex *k, size_t *out);

/**
 * Homology of the real moment-angle complex in `degree`: free rank and
 * torsion coefficients.
 *
 * # Safety
 * `k` live; `free_rank` and `n_torsion` writable; `torsion` holds `cap` values.
 */
enum RacgStatus racg_rmk_homology(const struct RacgComplex *k,
                                  size_t degree,
                                  size_t *free_rank,
                                  uint64_t *torsion,
                                  size_t cap,
                                  size_t *n_torsion);

/**
 * Number of commutator generators of the commutator subgroup.
 *
 * # Safety
 * `k` live; `out` writable.
 */
enum RacgStatus racg_gscox_count(const struct RacgComplex *k, size_t *out);

/**
 * Computes the class-`class` nilpotent quotient of the right-angled
 * Coxeter group of `k`.
 *
 * # Safety
 * `k` live; `out` writable.
 */
enum RacgStatus racg_quotient_new(const struct RacgComplex *k, size_t class_, struct RacgPc **out);

/**
 * Releases a quotient. Null is ignored.
 *
 * # Safety
 * `pc` must come from this API and not be used afterwards.
 */
void racg_pc_free(struct RacgPc *pc);

/**
 * `dim L^k` for `k = 1..=class` into `out`.
 *
 * # Safety
 * `pc` live; `out` holds `cap` values; `len` writable.
 */
enum RacgStatus racg_pc_dims(const struct RacgPc *pc, size_t *out, size_t cap, size_t *len);

/**
 * GF(2) coordinates of a commutator word such as `"(1,2,1,1)"` in
 * `L^degree`. `*in_gamma` is false when the word is not in `γ_degree`; no
 * coordinates are written then.
 *
 * # Safety
 * `pc` live; `word` NUL-terminated; `coords` holds `cap` bytes; `len` and
 * `in_gamma` writable.
 */
enum RacgStatus racg_express(const struct RacgPc *pc,
                             const char *word,
                             size_t degree,
                             uint8_t *coords,
                             size_t cap,
                             size_t *len,
                             bool *in_gamma);

/**
 * Runs one encoded claim (or all when `id` is null). Returns
 * `RACG_STATUS_CHECK_FAILED` if any selected claim fails.
 *
 * # Safety
 * `id` null or NUL-terminated.
 */
enum RacgStatus racg_verify_claims(const char *id);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RACG_LCS_H */
