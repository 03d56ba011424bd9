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

#ifndef TZETA_CORE_APPROX_HPP
#define TZETA_CORE_APPROX_HPP

#include <cstdint>

#include "core/zeta_core.hpp"

namespace tzeta {

enum class MethodKind : int {
  exact = 0,
  integral,
  average_integral,
  trapezoidal,
};

/// Tagged method selector; `k` is meaningful for trapezoidal only
/// (2 <= k <= n, validated against the params it is used with).
struct ApproxMethod {
  MethodKind kind = MethodKind::exact;
  std::int64_t k = 2;

  static ApproxMethod exact() { return {MethodKind::exact, 0}; }
  static ApproxMethod integral() { return {MethodKind::integral, 0}; }
  static ApproxMethod average_integral() {
    return {MethodKind::average_integral, 0};
  }
  static ApproxMethod trapezoidal(std::int64_t k = 2) {
    return {MethodKind::trapezoidal, k};
  }

  bool operator==(const ApproxMethod&) const = default;
};

/// The closed forms are singular at alpha = 1. Inside the guard band
/// |alpha - 1| <= alpha_guard a call throws Error(errc::alpha_near_one)
/// unless allow_alpha_one is set, in which case the analytic alpha->1
/// limit replaces the singular factor (an extension beyond the alpha != 1
/// formulas; off by default).
struct EvalOptions {
  double alpha_guard = 1e-8;
  bool allow_alpha_one = false;
};

/// ((n+1)^{1-a} - 1) / (1-a): the sum replaced by its integral from below.
/// Strictly underestimates S(n, a) for a > 0.
double integral_sum(const ZipfParams& params, const EvalOptions& options = {});

/// 1 + (n^{1-a} - 1) / (1-a): the integral bound from above. Strictly
/// overestimates S(n, a) for a > 0, n >= 2.
double upper_integral_sum(const ZipfParams& params,
                          const EvalOptions& options = {});

/// Arithmetic mean of integral_sum and upper_integral_sum; algebraically
/// ((n+1)^{1-a} + n^{1-a} - (1+a)) / (2(1-a)).
double average_integral_sum(const ZipfParams& params,
                            const EvalOptions& options = {});

/// (n^{1-a} - k^{1-a})/(1-a) + sum_{i=1}^{k-1} i^{-a} + (k^{-a} + n^{-a})/2:
/// the integral from k to n re-expanded by the trapezoidal rule, keeping
/// k-1 exact leading terms. At k = n this collapses to the exact sum.
double trapezoidal_sum(const ZipfParams& params, std::int64_t k,
                       const EvalOptions& options = {});

/// Dispatch on the method tag.
double approx_sum(const ZipfParams& params, const ApproxMethod& method,
                  const EvalOptions& options = {});

/// r^{-a} / approx_sum(params, method): the method's probability of rank r.
double approx_pmf(std::int64_t rank, const ZipfParams& params,
                  const ApproxMethod& method, const EvalOptions& options = {});

}  // namespace tzeta

#endif  // TZETA_CORE_APPROX_HPP
