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

#ifndef TZETA_CORE_ERROR_ANALYSIS_HPP
#define TZETA_CORE_ERROR_ANALYSIS_HPP

#include <cstdint>
#include <vector>

#include "core/approx.hpp"

namespace tzeta {

/// One sweep row. For non-trapezoidal methods, method.k is normalized
/// to 0.
struct ErrorRecord {
  ApproxMethod method;
  std::int64_t n = 0;
  double alpha = 0.0;
  double epsilon = 0.0;
};

/// Batch error-analysis grid: alpha stepped inclusively from alpha_min by
/// alpha_step up to alpha_max, skipping the exclusion band around 1,
/// crossed with every n and method. Defaults reproduce the usual picture:
/// three decade-spaced n values over alpha in [0.1, 2.0].
struct SweepGrid {
  double alpha_min = 0.1;
  double alpha_max = 2.0;
  double alpha_step = 0.01;
  std::vector<std::int64_t> n_values = {100, 1000, 10000};
  std::vector<ApproxMethod> methods;
  double guard_exclusion = 0.05;
  EvalOptions options;
};

/// Signed relative error of the method's pmf against the exact one,
/// identical for every rank: exact_partial_sum / approx_sum - 1.
/// Positive when the method underestimates the sum (and so overestimates
/// every probability). The exact method is rejected.
double relative_error(const ZipfParams& params, const ApproxMethod& method,
                      const EvalOptions& options = {});

/// The alpha values the grid visits, before exclusion-band filtering.
std::vector<double> sweep_alphas(const SweepGrid& grid);

/// One ErrorRecord per surviving (method, n, alpha) combination, ordered
/// by (method list position, n list position, ascending alpha).
/// Deterministic. Throws Error(errc::empty_grid) when the exclusion band
/// swallows every alpha.
std::vector<ErrorRecord> run_sweep(const SweepGrid& grid);

}  // namespace tzeta

#endif  // TZETA_CORE_ERROR_ANALYSIS_HPP
