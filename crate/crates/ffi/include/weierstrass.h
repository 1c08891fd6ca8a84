#ifndef WEIERSTRASS_H
#define WEIERSTRASS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Method selector for [`wp_weierstrass_report`].
 */
typedef enum {
  WP_METHOD_WRONSKIAN = 0,
  WP_METHOD_LOCAL = 1,
  WP_METHOD_BOTH = 2,
} WpMethod;

/**
 * Status codes; the nonzero values match the command-line exit codes.
 */
typedef enum {
  WP_STATUS_OK = 0,
  WP_STATUS_VERDICT_FAILED = 1,
  WP_STATUS_PARSE = 2,
  WP_STATUS_CROSS_CHECK = 3,
  WP_STATUS_DOMAIN = 4,
  WP_STATUS_BUDGET = 5,
  WP_STATUS_NULL_POINTER = 6,
  WP_STATUS_PANIC = 7,
} WpStatus;

/**
 * Opaque curve handle.
 */
typedef struct WpCurve WpCurve;

/**
 * Opaque Weierstrass divisor handle.
 */
typedef struct WpReport WpReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after success.
 * The pointer stays valid until the next library call on the thread.
 */
const char *wp_last_error(void);

/**
 * Parses a curve file (JSON text).
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
WpStatus wp_curve_from_json(const char *json, WpCurve **out);

/**
 * # Safety
 * `curve` must come from [`wp_curve_from_json`] and not be freed twice.
 */
void wp_curve_free(WpCurve *curve);

/**
 * # Safety
 * `curve` must be a live handle and `out` a valid pointer.
 */
WpStatus wp_curve_genus(const WpCurve *curve, uint32_t *out);

/**
 * Computes the Weierstrass divisor. `start_precision` 0 picks the default.
 *
 * # Safety
 * `curve` must be a live handle and `out` a valid pointer.
 */
WpStatus wp_weierstrass_report(const WpCurve *curve,
                               WpMethod method,
                               size_t start_precision,
                               WpReport **out);

/**
 * # Safety
 * `report` must come from [`wp_weierstrass_report`] and not be freed twice.
 */
void wp_report_free(WpReport *report);

/**
 * Total weight and the number of places of positive weight.
 *
 * # Safety
 * `report` must be a live handle; the out pointers must be valid.
 */
WpStatus wp_report_summary(const WpReport *report,
                           uint64_t *total_weight,
                           uint64_t *expected_total,
                           size_t *places);

/**
 * The report as JSON.
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
WpStatus wp_report_json(const WpReport *report, char **out);

/**
 * 2-torsion check on a hyperelliptic curve; `prime` reduces a curve over Q
 * (0 keeps the curve's field). Returns `VerdictFailed` when an assertion
 * fails.
 *
 * # Safety
 * `curve` must be a live handle; `subgroup_size` may be null.
 */
WpStatus wp_prop5(const WpCurve *curve,
                  uint64_t prime,
                  uint64_t seed,
                  uint64_t budget,
                  uint64_t *subgroup_size);

/**
 * 3-torsion check on the trigonal curve of genus `genus` over Q
 * (`prime` 0) or F_prime. `verdict_json` may be null.
 *
 * # Safety
 * `verdict_json`, when not null, must be a valid pointer.
 */
WpStatus wp_prop6(uint32_t genus, uint64_t prime, char **verdict_json);

/**
 * Point counts and L-polynomial as JSON.
 *
 * # Safety
 * `curve` must be a live handle and `out` a valid pointer.
 */
WpStatus wp_zeta_json(const WpCurve *curve, uint64_t prime, uint64_t budget, char **out);

/**
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void wp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WEIERSTRASS_H */
