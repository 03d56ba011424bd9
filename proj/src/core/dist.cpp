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

#include "core/dist.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace tzeta {

namespace {

void check_rank(std::int64_t rank, std::int64_t n) {
  if (rank < 1 || rank > n) {
    throw Error(errc::rank_out_of_range,
                "rank must be in [1, n]; got " + std::to_string(rank) +
                    " with n = " + std::to_string(n));
  }
}

}  // namespace

TruncatedZeta::TruncatedZeta(ZipfParams params)
    : params_(params),
      norm_(exact_partial_sum(params)),
      table_(std::make_shared<CumTable>()) {}

double TruncatedZeta::pmf(std::int64_t rank) const {
  check_rank(rank, params_.n);
  return std::pow(static_cast<double>(rank), -params_.alpha) / norm_;
}

const std::vector<double>& TruncatedZeta::cumulative() const {
  std::call_once(table_->once, [this] {
    std::vector<double> cum(static_cast<std::size_t>(params_.n));
    double sum = 0.0;
    double comp = 0.0;
    double prev = 0.0;
    for (std::int64_t i = 1; i <= params_.n; ++i) {
      const double term = std::pow(static_cast<double>(i), -params_.alpha);
      const double t = sum + term;
      if (std::fabs(sum) >= std::fabs(term)) {
        comp += (sum - t) + term;
      } else {
        comp += (term - t) + sum;
      }
      sum = t;
      // Clamp so the stored prefix values never step backwards, even when
      // a term falls below the rounding of the running sum.
      double value = sum + comp;
      if (value < prev) {
        value = prev;
      }
      cum[static_cast<std::size_t>(i - 1)] = value;
      prev = value;
    }
    table_->values = std::move(cum);
  });
  return table_->values;
}

double TruncatedZeta::cdf(std::int64_t rank) const {
  check_rank(rank, params_.n);
  const auto& cum = cumulative();
  return cum[static_cast<std::size_t>(rank - 1)] / cum.back();
}

std::int64_t TruncatedZeta::quantile_unchecked(double u) const {
  if (u >= 1.0) {
    return params_.n;
  }
  const auto& cum = cumulative();
  const double total = cum.back();
  std::int64_t lo = 1;
  std::int64_t hi = params_.n;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (cum[static_cast<std::size_t>(mid - 1)] / total >= u) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::int64_t TruncatedZeta::quantile(double u) const {
  if (std::isnan(u) || u < 0.0 || u > 1.0) {
    throw Error(errc::invalid_probability,
                "u must be a probability in [0, 1]");
  }
  return quantile_unchecked(u);
}

double TruncatedZeta::moment(std::int64_t m) const {
  if (m < 1) {
    throw Error(errc::invalid_argument,
                "moment order must be >= 1, got " + std::to_string(m));
  }
  return pow_sum(params_.n, params_.alpha - static_cast<double>(m)) / norm_;
}

}  // namespace tzeta
