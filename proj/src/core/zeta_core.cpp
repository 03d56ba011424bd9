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

#include "core/zeta_core.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace tzeta {

void ZipfParams::validate() const {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw Error(errc::invalid_argument,
                "alpha must be finite and >= 0, got " + std::to_string(alpha));
  }
  if (n < 1 || n > kMaxSpecies) {
    throw Error(errc::invalid_argument,
                "n must be in [1, 2^31-1], got " + std::to_string(n));
  }
}

namespace {

// Neumaier running compensation: `sum` plus the accumulated low-order
// correction `comp` represents the exact partial sum.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double term) {
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace

double pow_sum(std::int64_t n, double alpha) {
  CompensatedSum acc;
  if (alpha >= 0.0) {
    // i^{-alpha} shrinks with i: run i = n..1 so terms ascend in magnitude.
    for (std::int64_t i = n; i >= 1; --i) {
      acc.add(std::pow(static_cast<double>(i), -alpha));
    }
  } else {
    for (std::int64_t i = 1; i <= n; ++i) {
      acc.add(std::pow(static_cast<double>(i), -alpha));
    }
  }
  return acc.value();
}

double exact_partial_sum(const ZipfParams& params) {
  params.validate();
  return pow_sum(params.n, params.alpha);
}

double harmonic_approx(std::int64_t n) {
  if (n < 1 || n > kMaxSpecies) {
    throw Error(errc::invalid_argument,
                "n must be in [1, 2^31-1], got " + std::to_string(n));
  }
  const double x = static_cast<double>(n);
  return kEulerGamma + std::log(x) + 1.0 / (2.0 * x);
}

}  // namespace tzeta
