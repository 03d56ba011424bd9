/*
 * Copyright (c) tzeta contributors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * tzeta -- the truncated Zeta (generalized Zipf) distribution and fast
 * closed-form approximations of its normalizing constant.
 *
 * The distribution puts mass r^{-alpha} / S(n, alpha) on ranks r = 1..n,
 * where S(n, alpha) = sum_{i=1}^{n} i^{-alpha}. S has no closed form, so
 * this library provides, next to the exact (O(n), compensated) sum:
 *
 *   - the integral approximation      ((n+1)^{1-a} - 1) / (1-a)
 *   - the average integral form       mean of the under- and over-estimates
 *   - the trapezoidal-rule form       integral from k to n plus the first
 *                                     k-1 terms and half the endpoint terms
 *
 * all O(1) in n, plus the relative-error machinery to compare them against
 * the exact sum, and exact pmf/cdf/quantile/moment/sampling for the
 * distribution itself.
 *
 * All functions are thread-safe. Functions returning tz_status never
 * throw/abort; they report failures through the status code and leave
 * outputs untouched on error. Handles are freed with their _free function.
 */

#ifndef TZETA_TZETA_H
#define TZETA_TZETA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TZ_BUILD)
#    define TZ_API __declspec(dllexport)
#  else
#    define TZ_API __declspec(dllimport)
#  endif
#else
#  define TZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tz_status {
  TZ_OK = 0,
  TZ_ERR_INVALID_ARGUMENT = 1,  /* bad alpha/n/count/grid field */
  TZ_ERR_ALPHA_NEAR_ONE = 2,    /* alpha inside the guard band around 1 */
  TZ_ERR_INVALID_K = 3,         /* trapezoidal k outside [2, n] */
  TZ_ERR_RANK_OUT_OF_RANGE = 4, /* rank outside [1, n] */
  TZ_ERR_INVALID_PROBABILITY = 5, /* u outside [0, 1] or NaN */
  TZ_ERR_EMPTY_GRID = 6,        /* sweep grid has no evaluable points */
  TZ_ERR_NULL_POINTER = 7,
  TZ_ERR_INTERNAL = 8
} tz_status;

typedef enum tz_method_kind {
  TZ_METHOD_EXACT = 0,
  TZ_METHOD_INTEGRAL = 1,
  TZ_METHOD_AVG_INTEGRAL = 2,
  TZ_METHOD_TRAPEZOIDAL = 3
} tz_method_kind;

/* Sum method selector. k is consulted for TZ_METHOD_TRAPEZOIDAL only and
 * must satisfy 2 <= k <= n there. */
typedef struct tz_method {
  tz_method_kind kind;
  int64_t k;
} tz_method;

/* Evaluation options for the closed forms, which are singular at alpha = 1.
 * When |alpha - 1| <= alpha_guard the call fails with
 * TZ_ERR_ALPHA_NEAR_ONE unless allow_alpha_one is nonzero, in which case
 * the analytic alpha->1 limit of the singular factor is substituted
 * (e.g. (n^{1-a} - k^{1-a})/(1-a) -> ln(n/k)). */
typedef struct tz_options {
  double alpha_guard;  /* default 1e-8 */
  int allow_alpha_one; /* default 0 */
} tz_options;

TZ_API tz_options tz_options_default(void);

/* Library version as "major.minor.patch". */
TZ_API const char* tz_version(void);

/* Static description of a status code. Never NULL. */
TZ_API const char* tz_status_str(tz_status status);

/* ------------------------------------------------------------------ */
/* Normalizing-constant evaluation                                     */
/* ------------------------------------------------------------------ */

/* Exact S(n, alpha) = sum_{i=1}^{n} i^{-alpha}, summed smallest-terms-first
 * with compensated accumulation. O(n). Requires finite alpha >= 0 and
 * 1 <= n <= 2^31 - 1. */
TZ_API tz_status tz_exact_partial_sum(double alpha, int64_t n, double* out);

/* Closed form for S(n, 1): euler_gamma + ln(n) + 1/(2n). */
TZ_API tz_status tz_harmonic_approx(int64_t n, double* out);

/* S(n, alpha) evaluated by the selected method. `options` may be NULL for
 * defaults. */
TZ_API tz_status tz_approx_sum(double alpha, int64_t n, tz_method method,
                               const tz_options* options, double* out);

/* r^{-alpha} / tz_approx_sum(...): the (approximate) probability of rank
 * `rank`. With TZ_METHOD_EXACT this is the exact pmf. */
TZ_API tz_status tz_approx_pmf(double alpha, int64_t n, tz_method method,
                               const tz_options* options, int64_t rank,
                               double* out);

/* Signed relative error of the method's pmf against the exact one,
 * computed as exact_sum / approx_sum - 1 (rank-independent).
 * TZ_METHOD_EXACT is rejected with TZ_ERR_INVALID_ARGUMENT. */
TZ_API tz_status tz_relative_error(double alpha, int64_t n, tz_method method,
                                   const tz_options* options, double* out);

/* ------------------------------------------------------------------ */
/* The distribution object                                             */
/* ------------------------------------------------------------------ */

/* A validated truncated Zeta distribution with its exact normalizing
 * constant cached. Immutable and shareable across threads. cdf, quantile
 * and sampling build an O(n)-memory cumulative table on first use. */
typedef struct tz_dist tz_dist;

TZ_API tz_status tz_dist_create(double alpha, int64_t n, tz_dist** out);
TZ_API void tz_dist_free(tz_dist* dist);

TZ_API double tz_dist_alpha(const tz_dist* dist);
TZ_API int64_t tz_dist_n(const tz_dist* dist);
/* The cached exact S(n, alpha). */
TZ_API double tz_dist_norm(const tz_dist* dist);

TZ_API tz_status tz_dist_pmf(const tz_dist* dist, int64_t rank, double* out);
/* S(rank, alpha) / S(n, alpha); equals 1 at rank = n. */
TZ_API tz_status tz_dist_cdf(const tz_dist* dist, int64_t rank, double* out);
/* Smallest rank r with cdf(r) >= u. u = 0 maps to 1, u = 1 maps to n. */
TZ_API tz_status tz_dist_quantile(const tz_dist* dist, double u,
                                  int64_t* out_rank);
/* m-th raw moment E[X^m] = S(n, alpha - m) / S(n, alpha), m >= 1. */
TZ_API tz_status tz_dist_moment(const tz_dist* dist, int64_t m, double* out);

/* Deterministic 64-bit random stream (mt19937_64 under the hood); the same
 * seed always reproduces the same draws. Not thread-safe: use one stream
 * per thread. */
typedef struct tz_rng tz_rng;

TZ_API tz_rng* tz_rng_create(uint64_t seed);
TZ_API void tz_rng_free(tz_rng* rng);

/* One draw: quantile(U) with U uniform on (0, 1) from `rng`. */
TZ_API tz_status tz_dist_sample(const tz_dist* dist, tz_rng* rng,
                                int64_t* out_rank);
/* `count` consecutive draws into out_ranks[0..count-1]. */
TZ_API tz_status tz_dist_sample_n(const tz_dist* dist, tz_rng* rng,
                                  int64_t count, int64_t* out_ranks);

/* ------------------------------------------------------------------ */
/* Relative-error sweeps                                               */
/* ------------------------------------------------------------------ */

/* One sweep row: the relative error of `method` at (n, alpha). For
 * non-trapezoidal methods method.k is normalized to 0. */
typedef struct tz_sweep_record {
  tz_method method;
  int64_t n;
  double alpha;
  double epsilon;
} tz_sweep_record;

/* Batch grid: alpha stepped inclusively from alpha_min by alpha_step up to
 * alpha_max, skipping |alpha - 1| < guard_exclusion, crossed with every n
 * and every method. Constraints: alpha_min > 0, alpha_step > 0,
 * alpha_max >= alpha_min, guard_exclusion >= options.alpha_guard, methods
 * must not contain TZ_METHOD_EXACT. */
typedef struct tz_sweep_grid {
  double alpha_min;
  double alpha_max;
  double alpha_step;
  double guard_exclusion;
  const int64_t* n_values;
  size_t n_count;
  const tz_method* methods;
  size_t method_count;
  tz_options options;
} tz_sweep_grid;

typedef struct tz_sweep_result tz_sweep_result;

/* Runs the sweep; records are ordered by (method list position, n list
 * position, ascending alpha) and the run is deterministic. Fails with
 * TZ_ERR_EMPTY_GRID if the exclusion band swallows every alpha. */
TZ_API tz_status tz_sweep_run(const tz_sweep_grid* grid,
                              tz_sweep_result** out);
TZ_API size_t tz_sweep_result_size(const tz_sweep_result* result);
/* Contiguous array of tz_sweep_result_size() records; owned by `result`. */
TZ_API const tz_sweep_record* tz_sweep_result_data(
    const tz_sweep_result* result);
TZ_API void tz_sweep_result_free(tz_sweep_result* result);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TZETA_TZETA_H */
