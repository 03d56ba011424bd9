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

#include "core/error_analysis.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace tzeta {

double relative_error(const ZipfParams& params, const ApproxMethod& method,
                      const EvalOptions& options) {
  if (method.kind == MethodKind::exact) {
    throw Error(errc::invalid_argument,
                "relative error is not defined for the exact method");
  }
  return exact_partial_sum(params) / approx_sum(params, method, options) - 1.0;
}

namespace {

void validate_grid(const SweepGrid& grid) {
  const auto bad = [](const std::string& what) {
    throw Error(errc::invalid_argument, "invalid sweep grid: " + what);
  };
  if (!std::isfinite(grid.alpha_min) || grid.alpha_min <= 0.0) {
    bad("alpha_min must be finite and > 0");
  }
  if (!std::isfinite(grid.alpha_step) || grid.alpha_step <= 0.0) {
    bad("alpha_step must be finite and > 0");
  }
  if (!std::isfinite(grid.alpha_max) || grid.alpha_max < grid.alpha_min) {
    bad("alpha_max must be finite and >= alpha_min");
  }
  if (!(grid.guard_exclusion >= grid.options.alpha_guard)) {
    bad("guard_exclusion must be >= the alpha guard");
  }
  if (grid.n_values.empty()) {
    bad("n_values must not be empty");
  }
  for (const std::int64_t n : grid.n_values) {
    ZipfParams{grid.alpha_min, n}.validate();
  }
  if (grid.methods.empty()) {
    bad("methods must not be empty");
  }
  for (const ApproxMethod& m : grid.methods) {
    if (m.kind == MethodKind::exact) {
      bad("the exact method has no relative error");
    }
  }
}

// Keeps boundary points: an alpha sitting exactly on the exclusion edge
// (up to step rounding) is not skipped.
bool excluded(double alpha, double guard_exclusion) {
  return std::fabs(alpha - 1.0) < guard_exclusion - 1e-12;
}

}  // namespace

std::vector<double> sweep_alphas(const SweepGrid& grid) {
  validate_grid(grid);
  const double span = (grid.alpha_max - grid.alpha_min) / grid.alpha_step;
  const auto count = static_cast<std::int64_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> alphas;
  alphas.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    alphas.push_back(grid.alpha_min + static_cast<double>(i) * grid.alpha_step);
  }
  return alphas;
}

std::vector<ErrorRecord> run_sweep(const SweepGrid& grid) {
  const std::vector<double> alphas = sweep_alphas(grid);
  std::vector<ErrorRecord> records;
  for (const ApproxMethod& method : grid.methods) {
    ApproxMethod normalized = method;
    if (normalized.kind != MethodKind::trapezoidal) {
      normalized.k = 0;
    }
    for (const std::int64_t n : grid.n_values) {
      for (const double alpha : alphas) {
        if (excluded(alpha, grid.guard_exclusion)) {
          continue;
        }
        const ZipfParams params{alpha, n};
        records.push_back({normalized, n, alpha,
                           relative_error(params, method, grid.options)});
      }
    }
  }
  if (records.empty()) {
    throw Error(errc::empty_grid,
                "the exclusion band leaves no grid points to evaluate");
  }
  return records;
}

}  // namespace tzeta
