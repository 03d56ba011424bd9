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

#include "core/approx.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace tzeta {

namespace {

// x^e as exp(e * ln x); e is 1 - alpha in the formulas below.
double exp_log_pow(double x, double e) { return std::exp(e * std::log(x)); }

// True when the alpha->1 limit branch applies; throws when alpha sits in
// the guard band and the limit branch was not requested.
bool use_alpha_one_limit(double alpha, const EvalOptions& options) {
  if (std::fabs(alpha - 1.0) > options.alpha_guard) {
    return false;
  }
  if (!options.allow_alpha_one) {
    throw Error(errc::alpha_near_one,
                "alpha = " + std::to_string(alpha) +
                    " is within the guard band around 1; pass a method "
                    "valid at 1 or enable the alpha->1 limit");
  }
  return true;
}

void check_k(std::int64_t k, const ZipfParams& params) {
  if (k < 2 || k > params.n) {
    throw Error(errc::invalid_k, "k must be in [2, n]; got k = " +
                                     std::to_string(k) +
                                     " with n = " + std::to_string(params.n));
  }
}

}  // namespace

double integral_sum(const ZipfParams& params, const EvalOptions& options) {
  params.validate();
  const double n = static_cast<double>(params.n);
  if (params.alpha == 0.0) {
    return n;  // (n+1) - 1, exactly
  }
  if (use_alpha_one_limit(params.alpha, options)) {
    return std::log(n + 1.0);
  }
  const double h = 1.0 - params.alpha;
  return (exp_log_pow(n + 1.0, h) - 1.0) / h;
}

double upper_integral_sum(const ZipfParams& params,
                          const EvalOptions& options) {
  params.validate();
  const double n = static_cast<double>(params.n);
  if (params.alpha == 0.0) {
    return n;  // 1 + (n - 1), exactly
  }
  if (use_alpha_one_limit(params.alpha, options)) {
    return 1.0 + std::log(n);
  }
  const double h = 1.0 - params.alpha;
  return 1.0 + (exp_log_pow(n, h) - 1.0) / h;
}

double average_integral_sum(const ZipfParams& params,
                            const EvalOptions& options) {
  return 0.5 * (integral_sum(params, options) +
                upper_integral_sum(params, options));
}

double trapezoidal_sum(const ZipfParams& params, std::int64_t k,
                       const EvalOptions& options) {
  params.validate();
  check_k(k, params);
  const double n = static_cast<double>(params.n);
  const double kd = static_cast<double>(k);
  if (params.alpha == 0.0) {
    return n;  // (n - k) + (k - 1) + 1, exactly
  }
  const double pk = std::pow(kd, -params.alpha);
  const double pn = std::pow(n, -params.alpha);
  double integral;
  if (use_alpha_one_limit(params.alpha, options)) {
    integral = std::log(n / kd);
  } else {
    // x^{1-a} computed as x * x^{-a}: keeps the expanded-denominator form
    // of the pmf within a few ulp and makes the integral vanish exactly at
    // k = n.
    integral = (n * pn - kd * pk) / (1.0 - params.alpha);
  }
  return integral + pow_sum(k - 1, params.alpha) + 0.5 * (pk + pn);
}

double approx_sum(const ZipfParams& params, const ApproxMethod& method,
                  const EvalOptions& options) {
  switch (method.kind) {
    case MethodKind::exact:
      return exact_partial_sum(params);
    case MethodKind::integral:
      return integral_sum(params, options);
    case MethodKind::average_integral:
      return average_integral_sum(params, options);
    case MethodKind::trapezoidal:
      return trapezoidal_sum(params, method.k, options);
  }
  throw Error(errc::invalid_argument, "unknown approximation method");
}

double approx_pmf(std::int64_t rank, const ZipfParams& params,
                  const ApproxMethod& method, const EvalOptions& options) {
  params.validate();
  if (rank < 1 || rank > params.n) {
    throw Error(errc::rank_out_of_range,
                "rank must be in [1, n]; got " + std::to_string(rank) +
                    " with n = " + std::to_string(params.n));
  }
  const double denom = approx_sum(params, method, options);
  return std::pow(static_cast<double>(rank), -params.alpha) / denom;
}

}  // namespace tzeta
