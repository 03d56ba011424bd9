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

#include "tzeta/tzeta.h"

#include <limits>
#include <memory>
#include <new>
#include <random>
#include <vector>

#include "core/dist.hpp"
#include "core/error.hpp"
#include "core/error_analysis.hpp"

// Everything here is a thin translation layer: C structs to core types on
// the way in, exceptions to status codes on the way out. No exception may
// cross the C boundary.

struct tz_dist {
  tzeta::TruncatedZeta dist;
};

struct tz_rng {
  std::mt19937_64 engine;
};

struct tz_sweep_result {
  std::vector<tz_sweep_record> records;
};

namespace {

tz_status to_status(tzeta::errc code) {
  switch (code) {
    case tzeta::errc::invalid_argument:
      return TZ_ERR_INVALID_ARGUMENT;
    case tzeta::errc::alpha_near_one:
      return TZ_ERR_ALPHA_NEAR_ONE;
    case tzeta::errc::invalid_k:
      return TZ_ERR_INVALID_K;
    case tzeta::errc::rank_out_of_range:
      return TZ_ERR_RANK_OUT_OF_RANGE;
    case tzeta::errc::invalid_probability:
      return TZ_ERR_INVALID_PROBABILITY;
    case tzeta::errc::empty_grid:
      return TZ_ERR_EMPTY_GRID;
  }
  return TZ_ERR_INTERNAL;
}

template <typename Fn>
tz_status wrap(Fn&& fn) noexcept {
  try {
    fn();
    return TZ_OK;
  } catch (const tzeta::Error& e) {
    return to_status(e.code());
  } catch (...) {
    return TZ_ERR_INTERNAL;
  }
}

tzeta::EvalOptions to_options(const tz_options* options) {
  if (options == nullptr) {
    return {};
  }
  return {options->alpha_guard, options->allow_alpha_one != 0};
}

tzeta::ApproxMethod to_method(tz_method method) {
  switch (method.kind) {
    case TZ_METHOD_EXACT:
      return tzeta::ApproxMethod::exact();
    case TZ_METHOD_INTEGRAL:
      return tzeta::ApproxMethod::integral();
    case TZ_METHOD_AVG_INTEGRAL:
      return tzeta::ApproxMethod::average_integral();
    case TZ_METHOD_TRAPEZOIDAL:
      return tzeta::ApproxMethod::trapezoidal(method.k);
  }
  throw tzeta::Error(tzeta::errc::invalid_argument, "unknown method kind");
}

tz_method from_method(const tzeta::ApproxMethod& method) {
  tz_method out{TZ_METHOD_EXACT, 0};
  switch (method.kind) {
    case tzeta::MethodKind::exact:
      out.kind = TZ_METHOD_EXACT;
      break;
    case tzeta::MethodKind::integral:
      out.kind = TZ_METHOD_INTEGRAL;
      break;
    case tzeta::MethodKind::average_integral:
      out.kind = TZ_METHOD_AVG_INTEGRAL;
      break;
    case tzeta::MethodKind::trapezoidal:
      out.kind = TZ_METHOD_TRAPEZOIDAL;
      break;
  }
  out.k = method.k;
  return out;
}

}  // namespace

extern "C" {

tz_options tz_options_default(void) { return {1e-8, 0}; }

const char* tz_version(void) { return TZ_VERSION_STRING; }

const char* tz_status_str(tz_status status) {
  switch (status) {
    case TZ_OK:
      return "ok";
    case TZ_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case TZ_ERR_ALPHA_NEAR_ONE:
      return "alpha is within the guard band around 1";
    case TZ_ERR_INVALID_K:
      return "trapezoidal k must be in [2, n]";
    case TZ_ERR_RANK_OUT_OF_RANGE:
      return "rank out of range";
    case TZ_ERR_INVALID_PROBABILITY:
      return "probability must be in [0, 1]";
    case TZ_ERR_EMPTY_GRID:
      return "sweep grid has no evaluable points";
    case TZ_ERR_NULL_POINTER:
      return "null pointer";
    case TZ_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

tz_status tz_exact_partial_sum(double alpha, int64_t n, double* out) {
  if (out == nullptr) return TZ_ERR_NULL_POINTER;
  return wrap([&] { *out = tzeta::exact_partial_sum({alpha, n}); });
}

tz_status tz_harmonic_approx(int64_t n, double* out) {
  if (out == nullptr) return TZ_ERR_NULL_POINTER;
  return wrap([&] { *out = tzeta::harmonic_approx(n); });
}

tz_status tz_approx_sum(double alpha, int64_t n, tz_method method,
                        const tz_options* options, double* out) {
  if (out == nullptr) return TZ_ERR_NULL_POINTER;
  return wrap([&] {
    *out = tzeta::approx_sum({alpha, n}, to_method(method),
                             to_options(options));
  });
}

tz_status tz_approx_pmf(double alpha, int64_t n, tz_method method,
                        const tz_options* options, int64_t rank, double* out) {
  if (out == nullptr) return TZ_ERR_NULL_POINTER;
  return wrap([&] {
    *out = tzeta::approx_pmf(rank, {alpha, n}, to_method(method),
                             to_options(options));
  });
}

tz_status tz_relative_error(double alpha, int64_t n, tz_method method,
                            const tz_options* options, double* out) {
  if (out == nullptr) return TZ_ERR_NULL_POINTER;
  return wrap([&] {
    *out = tzeta::relative_error({alpha, n}, to_method(method),
                                 to_options(options));
  });
}

tz_status tz_dist_create(double alpha, int64_t n, tz_dist** out) {
  if (out == nullptr) return TZ_ERR_NULL_POINTER;
  return wrap([&] {
    *out = new tz_dist{tzeta::TruncatedZeta(tzeta::ZipfParams{alpha, n})};
  });
}

void tz_dist_free(tz_dist* dist) { delete dist; }

double tz_dist_alpha(const tz_dist* dist) {
  return dist != nullptr ? dist->dist.alpha()
                         : std::numeric_limits<double>::quiet_NaN();
}

int64_t tz_dist_n(const tz_dist* dist) {
  return dist != nullptr ? dist->dist.n() : 0;
}

double tz_dist_norm(const tz_dist* dist) {
  return dist != nullptr ? dist->dist.norm()
                         : std::numeric_limits<double>::quiet_NaN();
}

tz_status tz_dist_pmf(const tz_dist* dist, int64_t rank, double* out) {
  if (dist == nullptr || out == nullptr) return TZ_ERR_NULL_POINTER;
  return wrap([&] { *out = dist->dist.pmf(rank); });
}

tz_status tz_dist_cdf(const tz_dist* dist, int64_t rank, double* out) {
  if (dist == nullptr || out == nullptr) return TZ_ERR_NULL_POINTER;
  return wrap([&] { *out = dist->dist.cdf(rank); });
}

tz_status tz_dist_quantile(const tz_dist* dist, double u, int64_t* out_rank) {
  if (dist == nullptr || out_rank == nullptr) return TZ_ERR_NULL_POINTER;
  return wrap([&] { *out_rank = dist->dist.quantile(u); });
}

tz_status tz_dist_moment(const tz_dist* dist, int64_t m, double* out) {
  if (dist == nullptr || out == nullptr) return TZ_ERR_NULL_POINTER;
  return wrap([&] { *out = dist->dist.moment(m); });
}

tz_rng* tz_rng_create(uint64_t seed) {
  return new (std::nothrow) tz_rng{std::mt19937_64(seed)};
}

void tz_rng_free(tz_rng* rng) { delete rng; }

tz_status tz_dist_sample(const tz_dist* dist, tz_rng* rng,
                         int64_t* out_rank) {
  if (dist == nullptr || rng == nullptr || out_rank == nullptr) {
    return TZ_ERR_NULL_POINTER;
  }
  return wrap([&] { *out_rank = dist->dist.sample(rng->engine); });
}

tz_status tz_dist_sample_n(const tz_dist* dist, tz_rng* rng, int64_t count,
                           int64_t* out_ranks) {
  if (dist == nullptr || rng == nullptr || out_ranks == nullptr) {
    return TZ_ERR_NULL_POINTER;
  }
  if (count < 1) {
    return TZ_ERR_INVALID_ARGUMENT;
  }
  return wrap([&] {
    for (int64_t i = 0; i < count; ++i) {
      out_ranks[i] = dist->dist.sample(rng->engine);
    }
  });
}

tz_status tz_sweep_run(const tz_sweep_grid* grid, tz_sweep_result** out) {
  if (grid == nullptr || out == nullptr || grid->n_values == nullptr ||
      grid->methods == nullptr) {
    return TZ_ERR_NULL_POINTER;
  }
  return wrap([&] {
    tzeta::SweepGrid core_grid;
    core_grid.alpha_min = grid->alpha_min;
    core_grid.alpha_max = grid->alpha_max;
    core_grid.alpha_step = grid->alpha_step;
    core_grid.guard_exclusion = grid->guard_exclusion;
    core_grid.options = to_options(&grid->options);
    core_grid.n_values.assign(grid->n_values, grid->n_values + grid->n_count);
    core_grid.methods.clear();
    core_grid.methods.reserve(grid->method_count);
    for (size_t i = 0; i < grid->method_count; ++i) {
      core_grid.methods.push_back(to_method(grid->methods[i]));
    }
    const std::vector<tzeta::ErrorRecord> records =
        tzeta::run_sweep(core_grid);
    auto result = std::make_unique<tz_sweep_result>();
    result->records.reserve(records.size());
    for (const tzeta::ErrorRecord& rec : records) {
      result->records.push_back(
          {from_method(rec.method), rec.n, rec.alpha, rec.epsilon});
    }
    *out = result.release();
  });
}

size_t tz_sweep_result_size(const tz_sweep_result* result) {
  return result != nullptr ? result->records.size() : 0;
}

const tz_sweep_record* tz_sweep_result_data(const tz_sweep_result* result) {
  return result != nullptr && !result->records.empty()
             ? result->records.data()
             : nullptr;
}

void tz_sweep_result_free(tz_sweep_result* result) { delete result; }

}  // extern "C"
