/* C interface to the bihyper hypergeometric identity library. */

#ifndef BIHYPER_H
#define BIHYPER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Identity selector for verification runs.
 */
typedef enum BhIdentityKind {
  BhIdentityKind_Dougall = 0,
  BhIdentityKind_Saalschutz = 1,
  BhIdentityKind_Semifinite = 2,
  BhIdentityKind_LimitDecay = 3,
} BhIdentityKind;

/**
 * How a series summation ended.
 */
typedef enum BhSeriesVerdict {
  BhSeriesVerdict_Converged = 0,
  BhSeriesVerdict_Terminated = 1,
  BhSeriesVerdict_MaxTermsExceeded = 2,
  BhSeriesVerdict_Diverged = 3,
} BhSeriesVerdict;

/**
 * Status code returned by every API function.
 */
typedef enum BhStatus {
  BhStatus_Ok = 0,
  /**
   * An argument sits on a gamma pole.
   */
  BhStatus_PoleError = 1,
  /**
   * A magnitude left the double-precision range.
   */
  BhStatus_OverflowError = 2,
  /**
   * A denominator shifted factorial vanished.
   */
  BhStatus_DivisionByZero = 3,
  /**
   * Series shape does not admit the requested operation.
   */
  BhStatus_ShapeError = 4,
  /**
   * A series denominator parameter is a nonpositive integer.
   */
  BhStatus_DegenerateDenominator = 5,
  /**
   * Input violates the convergence condition.
   */
  BhStatus_DivergentInput = 6,
  /**
   * An identity pivot is too close to zero.
   */
  BhStatus_NearSingular = 7,
  /**
   * A parameter lies outside the supported envelope.
   */
  BhStatus_OutOfRange = 8,
  /**
   * Invalid configuration value.
   */
  BhStatus_ConfigError = 9,
  /**
   * A required pointer argument was null.
   */
  BhStatus_NullPointer = 10,
} BhStatus;

/**
 * Opaque verification report handle.
 */
typedef struct BhReport BhReport;

/**
 * Complex double, layout-compatible with C99 `double _Complex` pairs.
 */
typedef struct BhComplex {
  double re;
  double im;
} BhComplex;

/**
 * The (a, b, c, d) quadruple of every identity in the library.
 */
typedef struct BhParams {
  struct BhComplex a;
  struct BhComplex b;
  struct BhComplex c;
  struct BhComplex d;
} BhParams;

/**
 * Value, error estimate, and bookkeeping of one summation.
 */
typedef struct BhSeriesOutcome {
  struct BhComplex value;
  double abs_error_estimate;
  uintptr_t terms_used;
  enum BhSeriesVerdict verdict;
} BhSeriesOutcome;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Principal-branch log Γ(z).
 */
enum BhStatus bh_log_gamma(struct BhComplex z, struct BhComplex *out);

/**
 * Γ(z).
 */
enum BhStatus bh_gamma(struct BhComplex z, struct BhComplex *out);

/**
 * Shifted factorial (x)ₙ for integer n of either sign.
 */
enum BhStatus bh_pochhammer(struct BhComplex x, int64_t n, struct BhComplex *out);

/**
 * Reflection form (x)₋ₘ = (−1)ᵐ/(1−x)ₘ.
 */
enum BhStatus bh_pochhammer_reflect(struct BhComplex x, uint64_t m, struct BhComplex *out);

/**
 * |Γ(n+x)/Γ(n+y)·n^(y−x) − 1|.
 */
enum BhStatus bh_limit_ratio_defect(struct BhComplex x,
                                    struct BhComplex y,
                                    uint64_t n,
                                    double *out);

/**
 * Single bilateral term (a)ₖ(b)ₖ/[(c)ₖ(d)ₖ], any integer k.
 */
enum BhStatus bh_h22_term(struct BhParams params, int64_t k, struct BhComplex *out);

/**
 * Bilateral ₂H₂ sum over all integers k.
 */
enum BhStatus bh_sum_h22(struct BhParams params,
                         double tol,
                         uintptr_t max_terms,
                         struct BhSeriesOutcome *out);

/**
 * Dougall's closed form for the bilateral sum.
 */
enum BhStatus bh_dougall_rhs(struct BhParams params, struct BhComplex *out);

/**
 * Left side of the nonterminating Saalschütz identity (a ₃F₂ at 1).
 */
enum BhStatus bh_saalschutz_lhs(struct BhParams params,
                                double tol,
                                uintptr_t max_terms,
                                struct BhSeriesOutcome *out);

/**
 * Right side of the nonterminating Saalschütz identity (two terms).
 */
enum BhStatus bh_saalschutz_rhs(struct BhParams params,
                                double tol,
                                uintptr_t max_terms,
                                struct BhComplex *out);

/**
 * Left side of the semi-finite identity at shift n.
 */
enum BhStatus bh_semifinite_lhs(struct BhParams params,
                                uint32_t shift_n,
                                double tol,
                                uintptr_t max_terms,
                                struct BhSeriesOutcome *out);

/**
 * Right side of the semi-finite identity at shift n.
 */
enum BhStatus bh_semifinite_rhs(struct BhParams params,
                                uint32_t shift_n,
                                double tol,
                                uintptr_t max_terms,
                                struct BhComplex *out);

/**
 * First right-hand term of the semi-finite identity alone.
 */
enum BhStatus bh_semifinite_first_term(struct BhParams params,
                                       uint32_t shift_n,
                                       double tol,
                                       uintptr_t max_terms,
                                       struct BhComplex *out);

/**
 * Run a seeded verification. `n_list`/`n_len` may be null/0 to use the
 * identity's default shift list. On success `*out` owns a report that must
 * be released with [`bh_report_free`].
 *
 * # Safety
 * `n_list`, when non-null, must point to `n_len` readable u32 values;
 * `out` must be a valid pointer.
 */
enum BhStatus bh_verify_run(enum BhIdentityKind identity,
                            uintptr_t samples,
                            uint64_t seed,
                            double tol,
                            const uint32_t *n_list,
                            uintptr_t n_len,
                            uintptr_t parallelism,
                            uintptr_t max_terms,
                            struct BhReport **out);

/**
 * Copy the report's headline counts.
 *
 * # Safety
 * `report` must be a live handle from [`bh_verify_run`]; out-pointers may
 * be null to skip a field.
 */
enum BhStatus bh_report_summary(const struct BhReport *report,
                                uintptr_t *total,
                                uintptr_t *passed,
                                double *max_rel_dev);

/**
 * Render the report as JSON into a NUL-terminated string owned by the
 * caller; release it with [`bh_string_free`].
 *
 * # Safety
 * `report` must be a live handle; `out` must be valid.
 */
enum BhStatus bh_report_to_json(const struct BhReport *report, char **out);

/**
 * Release a string returned by [`bh_report_to_json`].
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void bh_string_free(char *s);

/**
 * Release a report handle.
 *
 * # Safety
 * `report` must come from [`bh_verify_run`] and not have been freed already.
 */
void bh_report_free(struct BhReport *report);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* BIHYPER_H */
