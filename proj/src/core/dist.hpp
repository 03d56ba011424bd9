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

#ifndef TZETA_CORE_DIST_HPP
#define TZETA_CORE_DIST_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "core/zeta_core.hpp"

namespace tzeta {

/// The truncated Zeta distribution P[X = r] = r^{-alpha} / S(n, alpha) on
/// ranks 1..n, with the exact normalizing constant cached at construction.
///
/// Instances are immutable and cheap to copy (copies share the lazily
/// built cumulative table). cdf/quantile/sampling build that table on
/// first use -- O(n) memory, O(log n) per draw afterwards -- under a
/// single-initialization guarantee, so concurrent first calls are fine.
class TruncatedZeta {
 public:
  explicit TruncatedZeta(ZipfParams params);

  const ZipfParams& params() const { return params_; }
  double alpha() const { return params_.alpha; }
  std::int64_t n() const { return params_.n; }

  /// Cached exact S(n, alpha).
  double norm() const { return norm_; }

  /// r^{-alpha} / norm; strictly decreasing in r for alpha > 0.
  double pmf(std::int64_t rank) const;

  /// S(rank, alpha) / S(n, alpha); nondecreasing, exactly 1 at rank = n.
  double cdf(std::int64_t rank) const;

  /// Smallest rank r with cdf(r) >= u (left-continuous inverse).
  /// quantile(0) = 1, quantile(1) = n. Throws
  /// Error(errc::invalid_probability) for u outside [0, 1] or NaN.
  std::int64_t quantile(double u) const;

  /// E[X^m] = S(n, alpha - m) / S(n, alpha) for m >= 1, via the
  /// compensated oracle sum.
  double moment(std::int64_t m) const;

  /// quantile(U) for U uniform on (0, 1) drawn from `gen`, which must be a
  /// 64-bit uniform generator (e.g. std::mt19937_64). Deterministic given
  /// the generator state.
  template <typename URBG>
  std::int64_t sample(URBG& gen) const {
    double u;
    do {
      u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    } while (u == 0.0);
    return quantile_unchecked(u);
  }

 private:
  struct CumTable {
    std::once_flag once;
    std::vector<double> values;
  };

  const std::vector<double>& cumulative() const;
  std::int64_t quantile_unchecked(double u) const;

  ZipfParams params_;
  double norm_;
  std::shared_ptr<CumTable> table_;
};

}  // namespace tzeta

#endif  // TZETA_CORE_DIST_HPP
