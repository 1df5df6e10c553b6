#ifndef QSHELL_H
#define QSHELL_H

#pragma once

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which computations [`qs_complex_homology_json`] runs.
 */
typedef enum QsMethod {
  QS_METHOD_FORMULA = 0,
  QS_METHOD_COUNT = 1,
  QS_METHOD_SNF = 2,
  QS_METHOD_ALL = 3,
} QsMethod;

/**
 * Result code of every fallible call.
 */
typedef enum QsStatus {
  QS_STATUS_OK = 0,
  QS_STATUS_NULL_POINTER = 1,
  QS_STATUS_INVALID_UTF8 = 2,
  QS_STATUS_INVALID_ARGUMENT = 3,
  QS_STATUS_PARSE = 4,
  QS_STATUS_NOT_PURE = 5,
  QS_STATUS_METHOD_UNAVAILABLE = 6,
  QS_STATUS_TOO_LARGE = 7,
  QS_STATUS_IO = 8,
  QS_STATUS_PANIC = 9,
} QsStatus;

/**
 * A q-complex.
 */
typedef struct QsComplex QsComplex;

/**
 * A finite field with its element order.
 */
typedef struct QsField QsField;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, empty after a success.
 * Valid until the next call into the library on the same thread.
 */
const char *qs_last_error(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void qs_string_free(char *s);

/**
 * Parses a field such as `gf(2)` or `gf(2^4):x^4+x+1`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum QsStatus qs_field_new(const char *spec, struct QsField **out);

/**
 * Number of elements of the field, 0 for a null handle.
 *
 * # Safety
 * `field` must be null or a live handle.
 */
uint32_t qs_field_order(const struct QsField *field);

/**
 * # Safety
 * `field` must be null or a live handle; it is invalid afterwards.
 */
void qs_field_free(struct QsField *field);

/**
 * All `k`-dimensional subspaces of `F_q^n`.
 *
 * # Safety
 * `field` must be a live handle; `out` must be writable.
 */
enum QsStatus qs_complex_uniform(const struct QsField *field,
                                 size_t n,
                                 size_t k,
                                 struct QsComplex **out);

/**
 * The hyperplanes of `F_q^(r+1)`.
 *
 * # Safety
 * `field` must be a live handle; `out` must be writable.
 */
enum QsStatus qs_complex_sphere(const struct QsField *field, size_t r, struct QsComplex **out);

/**
 * A complex from facet-list text (header `q=<field> n=<n>`, one facet per
 * line).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum QsStatus qs_complex_from_facets(const char *text, struct QsComplex **out);

/**
 * The matroid complex of the rank-metric code in generator-matrix text.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum QsStatus qs_complex_from_code(const char *text, struct QsComplex **out);

/**
 * # Safety
 * `complex` must be null or a live handle; it is invalid afterwards.
 */
void qs_complex_free(struct QsComplex *complex);

/**
 * # Safety
 * `complex` must be a live handle; `out` must be writable.
 */
enum QsStatus qs_complex_facet_count(const struct QsComplex *complex, size_t *out);

/**
 * Largest facet dimension.
 *
 * # Safety
 * `complex` must be a live handle; `out` must be writable.
 */
enum QsStatus qs_complex_dim(const struct QsComplex *complex, size_t *out);

/**
 * Whether the `cmp_q`-sorted facets form a shelling.
 *
 * # Safety
 * `complex` must be a live handle; `out` must be writable.
 */
enum QsStatus qs_complex_is_lex_shellable(const struct QsComplex *complex, bool *out);

/**
 * Whether the `cmp_l` order on maximal chains shells the punctured order
 * complex.
 *
 * # Safety
 * `complex` must be a live handle; `out` must be writable.
 */
enum QsStatus qs_complex_chain_order_shells(const struct QsComplex *complex, bool *out);

/**
 * The closed-form count in the complex's own coordinates.
 *
 * # Safety
 * `complex` must be a live handle; `out` must be writable.
 */
enum QsStatus qs_complex_betti_formula(const struct QsComplex *complex, uint64_t *out);

/**
 * Maximal chains whose restriction is the whole chain, in the complex's own
 * coordinates.
 *
 * # Safety
 * `complex` must be a live handle; `out` must be writable.
 */
enum QsStatus qs_complex_restriction_count(const struct QsComplex *complex, uint64_t *out);

/**
 * Rank of the reduced homology of the punctured order complex in `degree`,
 * by Smith normal form.
 *
 * # Safety
 * `complex` must be a live handle; `out` must be writable.
 */
enum QsStatus qs_complex_homology_rank(const struct QsComplex *complex,
                                       int64_t degree,
                                       uint64_t *out);

/**
 * Homology report as JSON. Release the string with [`qs_string_free`].
 *
 * # Safety
 * `complex` must be a live handle; `out` must be writable.
 */
enum QsStatus qs_complex_homology_json(const struct QsComplex *complex,
                                       enum QsMethod method,
                                       char **out);

/**
 * Shelling report as JSON. Release the string with [`qs_string_free`].
 *
 * # Safety
 * `complex` must be a live handle; `out` must be writable.
 */
enum QsStatus qs_complex_check_json(const struct QsComplex *complex, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QSHELL_H */
