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

#ifndef TZETA_CORE_ZETA_CORE_HPP
#define TZETA_CORE_ZETA_CORE_HPP

#include <cstdint>

namespace tzeta {

/// Euler-Mascheroni constant, 16 significant digits (OEIS A001620).
inline constexpr double kEulerGamma = 0.5772156649015329;

/// Largest supported number of species. The exact sum is O(n), so anything
/// much bigger than this is impractical anyway.
inline constexpr std::int64_t kMaxSpecies = 2147483647;  // 2^31 - 1

/// The (alpha, n) parameter pair of a truncated Zeta / generalized Zipf
/// model: alpha is the power-law exponent, n the number of species. Ranks
/// are arguments of the operations and live in [1, n].
struct ZipfParams {
  double alpha = 1.0;
  std::int64_t n = 1;

  /// Throws Error(errc::invalid_argument) unless alpha is finite and >= 0
  /// and 1 <= n <= kMaxSpecies.
  void validate() const;
};

/// Compensated (Neumaier) sum_{i=1}^{n} i^{-alpha}, terms added in
/// ascending magnitude. Accepts any finite alpha, including negative
/// exponents as needed for moments. Faithful to the exact value to ~1 ulp;
/// this is the ground-truth oracle the approximations are measured against.
double pow_sum(std::int64_t n, double alpha);

/// S(n, alpha) for validated parameters. O(n).
double exact_partial_sum(const ZipfParams& params);

/// Closed form for the harmonic number S(n, 1):
/// kEulerGamma + ln(n) + 1/(2n).
double harmonic_approx(std::int64_t n);

}  // namespace tzeta

#endif  // TZETA_CORE_ZETA_CORE_HPP
