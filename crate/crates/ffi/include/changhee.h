#ifndef CHANGHEE_H
#define CHANGHEE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define CH_TRIANGLE_STIRLING_FIRST 0

#define CH_TRIANGLE_STIRLING_FIRST_UNSIGNED 1

#define CH_TRIANGLE_STIRLING_SECOND 2

#define CH_TRIANGLE_LAH 3

/**
 * Result of every call.
 */
typedef enum ChStatus {
  CH_STATUS_OK = 0,
  CH_STATUS_NULL_POINTER = 1,
  CH_STATUS_INVALID_UTF8 = 2,
  CH_STATUS_INVALID_PARAMS = 3,
  CH_STATUS_INVALID_ARGUMENT = 4,
  CH_STATUS_UNKNOWN_NAME = 5,
  CH_STATUS_INTERNAL = 6,
  CH_STATUS_PANIC = 7,
} ChStatus;

/**
 * Opaque identity-suite report.
 */
typedef struct ChReport ChReport;

/**
 * Opaque `(alpha, r)` parameter spec.
 */
typedef struct ChSpec ChSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call on the same thread; do not free.
 */
const char *ch_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void ch_string_free(char *s);

/**
 * Builds a spec from `len` rational strings and multiplicities.
 *
 * # Safety
 * `alpha` and `r` must point to `len` readable elements (or be null when
 * `len` is 0); `out` must be writable.
 */
enum ChStatus ch_spec_new(const char *const *alpha,
                          const uint32_t *r,
                          size_t len,
                          struct ChSpec **out);

/**
 * Parses the `{"alpha": [...], "r": [...]}` parameter format.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum ChStatus ch_spec_from_json(const char *json, struct ChSpec **out);

/**
 * # Safety
 * `spec` must be null or a handle from this library, not yet freed.
 */
void ch_spec_free(struct ChSpec *spec);

/**
 * Number of factors `n`; 0 for a null handle.
 *
 * # Safety
 * `spec` must be null or a live handle.
 */
size_t ch_spec_len(const struct ChSpec *spec);

/**
 * Total degree `|r|`; 0 for a null handle.
 *
 * # Safety
 * `spec` must be null or a live handle.
 */
size_t ch_spec_total_degree(const struct ChSpec *spec);

/**
 * Coefficient `s_alpha(n, m; r)`; zero beyond the total degree.
 *
 * # Safety
 * `spec` must be a live handle; `out` must be writable.
 */
enum ChStatus ch_comtet_first(const struct ChSpec *spec, size_t m, char **out);

/**
 * First-kind multiparameter value at order `k`; `x` null gives the number.
 *
 * # Safety
 * `spec` must be a live handle, `x` null or NUL-terminated, `out` writable.
 */
enum ChStatus ch_mp_first(const struct ChSpec *spec, uint32_t k, const char *x, char **out);

/**
 * Second-kind multiparameter value at order `k`; `x` null gives the number.
 *
 * # Safety
 * As for [`ch_mp_first`].
 */
enum ChStatus ch_mp_second(const struct ChSpec *spec, uint32_t k, const char *x, char **out);

/**
 * Second-kind number through the Lah expansion of `(-y)_m`.
 *
 * # Safety
 * `spec` must be a live handle; `out` writable.
 */
enum ChStatus ch_mp_second_lah(const struct ChSpec *spec, uint32_t k, char **out);

/**
 * Order-one value for a spec with every multiplicity 1.
 *
 * # Safety
 * `spec` must be a live handle; `out` writable.
 */
enum ChStatus ch_generalized_changhee(const struct ChSpec *spec, char **out);

/**
 * First-kind poly-Cauchy value over the box `[0, l_1] x ... x [0, l_k]`;
 * `n_bounds` must equal `k`.
 *
 * # Safety
 * `bounds` must point to `n_bounds` NUL-terminated strings.
 */
enum ChStatus ch_poly_cauchy_first(const struct ChSpec *spec,
                                   uint32_t k,
                                   const char *const *bounds,
                                   size_t n_bounds,
                                   char **out);

/**
 * Second-kind counterpart of [`ch_poly_cauchy_first`].
 *
 * # Safety
 * As for [`ch_poly_cauchy_first`].
 */
enum ChStatus ch_poly_cauchy_second(const struct ChSpec *spec,
                                    uint32_t k,
                                    const char *const *bounds,
                                    size_t n_bounds,
                                    char **out);

/**
 * `Ch_n = (-1)^n n!/2^n`.
 *
 * # Safety
 * `out` must be writable.
 */
enum ChStatus ch_changhee_number(size_t n, char **out);

/**
 * Order-`k` Changhee polynomial `Ch_n^(k)(x)`; `x` null means 0.
 *
 * # Safety
 * `x` null or NUL-terminated; `out` writable.
 */
enum ChStatus ch_changhee_order_k(size_t n, uint32_t k, const char *x, char **out);

/**
 * Order-`k` Euler polynomial `E_n^(k)(x)`; `x` null means 0.
 *
 * # Safety
 * `x` null or NUL-terminated; `out` writable.
 */
enum ChStatus ch_euler_order_k(size_t n, uint32_t k, const char *x, char **out);

/**
 * Triangle entry `(n, k)` of kind `CH_TRIANGLE_*`.
 *
 * # Safety
 * `out` must be writable.
 */
enum ChStatus ch_triangle(uint32_t kind, size_t n, size_t k, char **out);

/**
 * Runs an identity suite by name.
 *
 * # Safety
 * `name` must be NUL-terminated; `out` writable.
 */
enum ChStatus ch_run_suite(const char *name, struct ChReport **out);

/**
 * The report as JSON, byte-identical to the CLI output.
 *
 * # Safety
 * `report` must be a live handle; `out` writable.
 */
enum ChStatus ch_report_json(const struct ChReport *report, char **out);

/**
 * 1 if every check produced its expected verdict, 0 if not, -1 for a null
 * handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
int32_t ch_report_all_as_expected(const struct ChReport *report);

/**
 * Number of checks in the report; 0 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
size_t ch_report_check_count(const struct ChReport *report);

/**
 * # Safety
 * `report` must be null or a handle from [`ch_run_suite`], not yet freed.
 */
void ch_report_free(struct ChReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHANGHEE_H */
