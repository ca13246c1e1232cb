#ifndef GENSCHUR_H
#define GENSCHUR_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GsBasisKind {
  GS_BASIS_KIND_MONOMIAL = 0,
  GS_BASIS_KIND_SP = 1,
  GS_BASIS_KIND_SO_EVEN = 2,
  GS_BASIS_KIND_SO_ODD = 3,
} GsBasisKind;

typedef enum GsStatus {
  GS_STATUS_OK = 0,
  /**
   * A mathematical precondition failed (truncation, length, singularity).
   */
  GS_STATUS_DOMAIN = 1,
  /**
   * Malformed input: bad JSON, unknown fields, unparsable rationals.
   */
  GS_STATUS_SCHEMA = 2,
  /**
   * A requested identity check evaluated to false.
   */
  GS_STATUS_IDENTITY_FAILED = 3,
  GS_STATUS_NULL_POINTER = 4,
  GS_STATUS_INVALID_UTF8 = 5,
  GS_STATUS_PANIC = 6,
} GsStatus;

/**
 * Opaque handle to a truncated polynomial basis.
 */
typedef struct GsBasis GsBasis;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates one of the built-in bases truncated at `n`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum GsStatus gs_basis_new(enum GsBasisKind kind, size_t n, struct GsBasis **out);

/**
 * Builds a basis from the JSON form used by the command line tool, e.g.
 * `{"kind":"coeffs","data":[["1"],["1/2","1"]]}`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum GsStatus gs_basis_from_json(const char *spec, struct GsBasis **out);

/**
 * Releases a basis. NULL is accepted.
 *
 * # Safety
 * `basis` must come from this library and not have been freed already.
 */
void gs_basis_free(struct GsBasis *basis);

/**
 * The truncation `N` of the basis, or 0 for NULL.
 *
 * # Safety
 * `basis` must be NULL or a live handle.
 */
size_t gs_basis_truncation(const struct GsBasis *basis);

/**
 * Evaluates the generalized Schur function `S_λ(x)` of `basis` by the
 * bi-alternant formula. `x` holds `x_len` rationals written as `"p/q"` or
 * integers; the result is written to `*out` in the same form.
 *
 * # Safety
 * `lambda` must point to `lambda_len` values (may be NULL when the length is
 * 0), `x` to `x_len` NUL-terminated strings, `out` to writable storage.
 */
enum GsStatus gs_schur(const struct GsBasis *basis,
                       const size_t *lambda,
                       size_t lambda_len,
                       const char *const *x,
                       size_t x_len,
                       char **out);

/**
 * Runs one command line request. `command` is a subcommand name such as
 * `"schur"` or `"walk"`; `request` is the JSON document. The JSON response,
 * including error documents, is always written to `*out` when the inputs
 * themselves are readable.
 *
 * # Safety
 * `command` and `request` must be NUL-terminated strings, `out` writable.
 */
enum GsStatus gs_run_json(const char *command, const char *request, uint64_t seed, char **out);

/**
 * Releases a string returned by this library. NULL is accepted.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void gs_string_free(char *s);

/**
 * Message for the last failed call on this thread, or NULL. The pointer stays
 * valid until the next call into this library on the same thread.
 */
const char *gs_last_error(void);

/**
 * Library version as a static string.
 */
const char *gs_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GENSCHUR_H */
