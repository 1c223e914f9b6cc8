#ifndef FTR_H
#define FTR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FtrFormat {
  FTR_FORMAT_TABLE = 0,
  FTR_FORMAT_CSV = 1,
  FTR_FORMAT_JSON = 2,
} FtrFormat;

typedef enum FtrStatus {
  FTR_STATUS_OK = 0,
  FTR_STATUS_NULL_POINTER = 1,
  FTR_STATUS_INVALID_UTF8 = 2,
  FTR_STATUS_PARSE = 3,
  FTR_STATUS_MISSING_CONSTANT = 4,
  FTR_STATUS_DIMENSION_MISMATCH = 5,
  FTR_STATUS_DOMAIN = 6,
  FTR_STATUS_CONFIG = 7,
  FTR_STATUS_CHECK_FAILED = 8,
  FTR_STATUS_INTERNAL = 9,
} FtrStatus;

/**
 * Opaque set of named constants.
 */
typedef struct FtrConstants FtrConstants;

/**
 * Opaque derivation report.
 */
typedef struct FtrReport FtrReport;

typedef struct FtrMcResult {
  double empirical_std;
  double predicted_std;
  double standard_error;
  double z_score;
  bool passed;
} FtrMcResult;

typedef struct FtrZooResult {
  uint32_t size;
  uint32_t boys;
  uint32_t girls;
  uint32_t winner_score;
  bool winner_is_boy;
  uint32_t families;
} FtrZooResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string.
 */
const char *ftr_version(void);

/**
 * Message of the last failure on this thread, or null. The string is newly
 * allocated; release it with [`ftr_string_free`].
 */
char *ftr_last_error(void);

void ftr_string_free(char *s);

enum FtrStatus ftr_constants_modern(uint32_t digits, struct FtrConstants **out_set);

enum FtrStatus ftr_constants_paper_era(uint32_t digits, struct FtrConstants **out_set);

/**
 * Parses dataset text in the `.cst` format.
 */
enum FtrStatus ftr_constants_parse(const char *text,
                                   uint32_t digits,
                                   struct FtrConstants **out_set);

void ftr_constants_free(struct FtrConstants *set);

/**
 * Value of a named constant in cgs-Gaussian units.
 */
enum FtrStatus ftr_constants_get(const struct FtrConstants *set,
                                 const char *name,
                                 double *out_value);

/**
 * N = 204·2²⁵⁶
 */
enum FtrStatus ftr_theoretical_n(double *out_value);

/**
 * G in cm³ g⁻¹ s⁻² from the theoretical N and the set's h, c and m_h.
 */
enum FtrStatus ftr_derive_g(const struct FtrConstants *set, double *out_value);

/**
 * Number of derivation rows whose checks fail; zero when the chain passes.
 */
enum FtrStatus ftr_chain_failures(const struct FtrConstants *set, uint32_t *out_count);

enum FtrStatus ftr_mc_centroid(uint64_t n_particles,
                               uint64_t trials,
                               uint64_t seed,
                               double r0,
                               struct FtrMcResult *out_result);

/**
 * Largest mixed family in the zoo puzzle.
 */
enum FtrStatus ftr_zoo_solve(struct FtrZooResult *out_result);

/**
 * Runs the constants chain into a report handle.
 */
enum FtrStatus ftr_report_derive(const struct FtrConstants *set,
                                 uint32_t sig_digits,
                                 struct FtrReport **out_report);

void ftr_report_free(struct FtrReport *report);

enum FtrStatus ftr_report_row_count(const struct FtrReport *report, size_t *out_count);

/**
 * `FTR_STATUS_OK` when every check passed, `FTR_STATUS_CHECK_FAILED` otherwise.
 */
enum FtrStatus ftr_report_passed(const struct FtrReport *report);

/**
 * Renders the report; release the string with [`ftr_string_free`].
 */
enum FtrStatus ftr_report_emit(const struct FtrReport *report,
                               enum FtrFormat format,
                               char **out_text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FTR_H */
