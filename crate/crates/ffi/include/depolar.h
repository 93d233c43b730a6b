/* Generated by cbindgen. Do not edit. */

#ifndef DEPOLAR_H
#define DEPOLAR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DpStatus {
  DP_STATUS_OK = 0,
  DP_STATUS_NULL_POINTER = 1,
  DP_STATUS_INVALID_UTF8 = 2,
  DP_STATUS_PARSE = 3,
  DP_STATUS_INVALID_ARGUMENT = 4,
  DP_STATUS_COMPUTE = 5,
  DP_STATUS_PANIC = 6,
} DpStatus;

/**
 * A finite-dimensional algebra given by structure constants.
 */
typedef struct DpAlgebra DpAlgebra;

/**
 * A degree-3 identity.
 */
typedef struct DpIdentity DpIdentity;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *dp_last_error(void);

const char *dp_version(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library.
 */
void dp_string_free(char *s);

/**
 * Parse an identity in the `left:` / `right:` text format.
 *
 * # Safety
 * `src` must be a NUL-terminated string and `out` a valid pointer.
 */
enum DpStatus dp_identity_parse(const char *src, struct DpIdentity **out);

/**
 * # Safety
 * `id` must be NULL or a handle from this library not yet freed.
 */
void dp_identity_free(struct DpIdentity *id);

/**
 * # Safety
 * `id` must be a live handle and `out` a valid pointer.
 */
enum DpStatus dp_identity_to_string(const struct DpIdentity *id, char **out);

/**
 * The polarized coefficients λ1..λ12 written as `lambda: ...`.
 *
 * # Safety
 * `id` must be a live handle and `out` a valid pointer.
 */
enum DpStatus dp_identity_polarize(const struct DpIdentity *id, char **out);

/**
 * Whether the `len` identities in `family` imply `target`.
 *
 * # Safety
 * `family` must point to `len` live handles, `target` must be live and
 * `implied` valid.
 */
enum DpStatus dp_implies(const struct DpIdentity *const *family,
                         size_t len,
                         const struct DpIdentity *target,
                         bool *implied);

/**
 * The Poisson identity obtained by fitting the JacAss family.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum DpStatus dp_solve_poisson(struct DpIdentity **out);

/**
 * Dimension of the arity-3 component of the operad defined by the family.
 *
 * # Safety
 * `family` must point to `len` live handles and `dim` be valid.
 */
enum DpStatus dp_operad_dim3(const struct DpIdentity *const *family, size_t len, size_t *dim);

/**
 * # Safety
 * `family` must point to `len` live handles and `self_dual` be valid.
 */
enum DpStatus dp_operad_is_self_dual(const struct DpIdentity *const *family,
                                     size_t len,
                                     bool *self_dual);

/**
 * Writes the dimensions of degrees 0..=max_degree into `dims`, which must
 * hold `max_degree + 1` entries.
 *
 * # Safety
 * `family` must point to `len` live handles and `dims` to `dims_len` writable entries.
 */
enum DpStatus dp_operad_free_dims(const struct DpIdentity *const *family,
                                  size_t len,
                                  size_t max_degree,
                                  size_t *dims,
                                  size_t dims_len);

/**
 * Parse an algebra in the `dim` / `deg` / `e i j = ...` text format.
 *
 * # Safety
 * `src` must be a NUL-terminated string and `out` a valid pointer.
 */
enum DpStatus dp_algebra_parse(const char *src, struct DpAlgebra **out);

/**
 * # Safety
 * `alg` must be NULL or a handle from this library not yet freed.
 */
void dp_algebra_free(struct DpAlgebra *alg);

/**
 * Check the identity on every triple of basis vectors. Graded algebras use
 * the Koszul sign rule.
 *
 * # Safety
 * `alg` and `id` must be live handles and `passed` valid.
 */
enum DpStatus dp_algebra_verify(const struct DpAlgebra *alg,
                                const struct DpIdentity *id,
                                bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEPOLAR_H */
