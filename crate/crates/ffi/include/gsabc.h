#ifndef GSABC_H
#define GSABC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of an FFI call.
 */
typedef enum GsabcStatus {
  GSABC_STATUS_OK = 0,
  GSABC_STATUS_NULL_POINTER = 1,
  GSABC_STATUS_INVALID_ARGUMENT = 2,
  GSABC_STATUS_UNKNOWN_FUNCTION = 3,
  GSABC_STATUS_BUDGET_EXHAUSTED = 4,
  GSABC_STATUS_NON_FINITE_OBJECTIVE = 5,
  GSABC_STATUS_BUFFER_TOO_SMALL = 6,
  GSABC_STATUS_PANIC = 7,
  GSABC_STATUS_INTERNAL = 8,
} GsabcStatus;

/**
 * Optimizer selector.
 */
typedef enum GsabcAlgorithm {
  GSABC_ALGORITHM_GSA = 0,
  GSABC_ALGORITHM_ABC = 1,
  GSABC_ALGORITHM_GSABC = 2,
} GsabcAlgorithm;

/**
 * Run configuration (opaque).
 */
typedef struct GsabcConfig GsabcConfig;

/**
 * Optimization outcome (opaque).
 */
typedef struct GsabcResult GsabcResult;

/**
 * Objective callback: `x` points at `dimension` doubles.
 */
typedef double (*GsabcObjectiveFn)(const double *x, size_t dimension, void *user_data);

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL.
 * The pointer stays valid until the next FFI call on the same thread.
 */
const char *gsabc_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *gsabc_version(void);

/**
 * New configuration with default parameters: hybrid, 50 000 evaluations,
 * seed 0. Release with [`gsabc_config_free`].
 */
struct GsabcConfig *gsabc_config_new(void);

/**
 * # Safety
 * `config` must come from [`gsabc_config_new`] and not be used again. NULL is ignored.
 */
void gsabc_config_free(struct GsabcConfig *config);

/**
 * # Safety
 * `config` must be a live handle or NULL.
 */
enum GsabcStatus gsabc_config_set_algorithm(struct GsabcConfig *config,
                                            enum GsabcAlgorithm algorithm);

/**
 * # Safety
 * `config` must be a live handle or NULL.
 */
enum GsabcStatus gsabc_config_set_budget(struct GsabcConfig *config, uint64_t max_evaluations);

/**
 * # Safety
 * `config` must be a live handle or NULL.
 */
enum GsabcStatus gsabc_config_set_seed(struct GsabcConfig *config, uint64_t seed);

/**
 * Population size; for ABC this is the colony size (twice the food sources).
 *
 * # Safety
 * `config` must be a live handle or NULL.
 */
enum GsabcStatus gsabc_config_set_population(struct GsabcConfig *config, size_t population);

/**
 * # Safety
 * `config` must be a live handle or NULL.
 */
enum GsabcStatus gsabc_config_set_g0(struct GsabcConfig *config, double g0);

/**
 * # Safety
 * `config` must be a live handle or NULL.
 */
enum GsabcStatus gsabc_config_set_alpha(struct GsabcConfig *config, double alpha);

/**
 * Scout trigger; 0 restores the dimension-dependent default.
 *
 * # Safety
 * `config` must be a live handle or NULL.
 */
enum GsabcStatus gsabc_config_set_limit(struct GsabcConfig *config, size_t limit);

/**
 * # Safety
 * `config` must be a live handle or NULL.
 */
enum GsabcStatus gsabc_config_set_scouts(struct GsabcConfig *config, bool enabled);

/**
 * Minimizes benchmark `f<function_number>` (1..=23). On success `*out`
 * receives a result handle to release with [`gsabc_result_free`].
 *
 * # Safety
 * `config` must be a live handle; `out` must be writable.
 */
enum GsabcStatus gsabc_optimize_benchmark(const struct GsabcConfig *config,
                                          uint32_t function_number,
                                          struct GsabcResult **out);

/**
 * Minimizes a caller-supplied objective over the box `[lower, upper]`
 * (both `dimension` long). `user_data` is passed through untouched.
 *
 * # Safety
 * `lower`/`upper` must point at `dimension` doubles; `objective` must be
 * safe to call with any in-bounds point; `out` must be writable.
 */
enum GsabcStatus gsabc_optimize_callback(const struct GsabcConfig *config,
                                         GsabcObjectiveFn objective,
                                         void *user_data,
                                         const double *lower,
                                         const double *upper,
                                         size_t dimension,
                                         struct GsabcResult **out);

/**
 * # Safety
 * `result` must come from an optimize call and not be used again. NULL is ignored.
 */
void gsabc_result_free(struct GsabcResult *result);

/**
 * Best objective value found, or NaN for a NULL handle.
 *
 * # Safety
 * `result` must be a live handle or NULL.
 */
double gsabc_result_best_objective(const struct GsabcResult *result);

/**
 * # Safety
 * `result` must be a live handle or NULL (yields 0).
 */
uint64_t gsabc_result_evaluations(const struct GsabcResult *result);

/**
 * # Safety
 * `result` must be a live handle or NULL (yields 0).
 */
size_t gsabc_result_dimension(const struct GsabcResult *result);

/**
 * Copies the best position into `buffer` (capacity `len`).
 *
 * # Safety
 * `result` must be a live handle; `buffer` must hold `len` doubles.
 */
enum GsabcStatus gsabc_result_best_position(const struct GsabcResult *result,
                                            double *buffer,
                                            size_t len);

/**
 * Number of convergence-trace points.
 *
 * # Safety
 * `result` must be a live handle or NULL (yields 0).
 */
size_t gsabc_result_trace_len(const struct GsabcResult *result);

/**
 * Copies the trace as parallel arrays: evaluation counts and best-so-far
 * objectives, each of capacity `len`.
 *
 * # Safety
 * `result` must be a live handle; both buffers must hold `len` elements.
 */
enum GsabcStatus gsabc_result_trace(const struct GsabcResult *result,
                                    uint64_t *evaluations,
                                    double *best_objectives,
                                    size_t len);

/**
 * Dimension of benchmark `f<function_number>`, or 0 if unknown.
 */
size_t gsabc_benchmark_dimension(uint32_t function_number);

/**
 * Evaluates benchmark `f<function_number>` at `x`. The noisy quartic (f7)
 * is evaluated without its noise term.
 *
 * # Safety
 * `x` must point at `dimension` doubles; `value` must be writable.
 */
enum GsabcStatus gsabc_benchmark_evaluate(uint32_t function_number,
                                          const double *x,
                                          size_t dimension,
                                          double *value);

/**
 * Evaluates benchmark `f<function_number>` exactly as an optimizer sees it;
 * the noise term of f7 is drawn from a stream seeded with `seed`.
 *
 * # Safety
 * As [`gsabc_benchmark_evaluate`].
 */
enum GsabcStatus gsabc_benchmark_evaluate_seeded(uint32_t function_number,
                                                 const double *x,
                                                 size_t dimension,
                                                 uint64_t seed,
                                                 double *value);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GSABC_H */
