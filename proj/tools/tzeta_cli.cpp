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

// Command-line front-end over the tzeta C API.
//
// Subcommands: pmf, cdf, sample, moment, error-sweep, bench. All tabular
// output is plain CSV with a header row, "." decimal point and floats
// printed with 17 significant digits, so runs with the same flags (and
// seed) are byte-identical. Exit codes: 0 success, 2 usage/validation
// error, 1 internal error.

#include <tzeta/tzeta.h>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

std::string fmt(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

int exit_code_for(tz_status status) {
  return status == TZ_ERR_INTERNAL ? 1 : 2;
}

int fail(tz_status status, const std::string& context) {
  std::cerr << "tzeta: " << context << ": " << tz_status_str(status) << "\n";
  return exit_code_for(status);
}

// Output target: --out path, or stdout.
class Output {
 public:
  bool open(const std::string& path) {
    if (path.empty()) {
      return true;
    }
    file_.open(path, std::ios::binary);
    return static_cast<bool>(file_);
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

bool parse_int(std::string_view text, std::int64_t* out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, *out);
  return ec == std::errc() && ptr == last;
}

// Rank list syntax: comma-separated entries, each a rank or an inclusive
// range "A-B". E.g. "1-3,7,20-22".
bool parse_ranks(const std::string& text, std::vector<std::int64_t>* out) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        std::string_view(text).substr(pos, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - pos);
    if (token.empty()) {
      return false;
    }
    const std::size_t dash = token.find('-', 1);  // allow no leading dash
    if (dash == std::string_view::npos) {
      std::int64_t r = 0;
      if (!parse_int(token, &r)) {
        return false;
      }
      out->push_back(r);
    } else {
      std::int64_t lo = 0;
      std::int64_t hi = 0;
      if (!parse_int(token.substr(0, dash), &lo) ||
          !parse_int(token.substr(dash + 1), &hi) || lo > hi) {
        return false;
      }
      for (std::int64_t r = lo; r <= hi; ++r) {
        out->push_back(r);
      }
    }
    if (comma == std::string::npos) {
      break;
    }
    pos = comma + 1;
  }
  return !out->empty();
}

bool parse_method(const std::string& token, std::int64_t k, tz_method* out) {
  if (token == "exact") {
    *out = {TZ_METHOD_EXACT, 0};
  } else if (token == "integral") {
    *out = {TZ_METHOD_INTEGRAL, 0};
  } else if (token == "avg-integral") {
    *out = {TZ_METHOD_AVG_INTEGRAL, 0};
  } else if (token == "trapezoidal") {
    *out = {TZ_METHOD_TRAPEZOIDAL, k};
  } else {
    return false;
  }
  return true;
}

const char* method_name(tz_method_kind kind) {
  switch (kind) {
    case TZ_METHOD_EXACT:
      return "exact";
    case TZ_METHOD_INTEGRAL:
      return "integral";
    case TZ_METHOD_AVG_INTEGRAL:
      return "avg-integral";
    case TZ_METHOD_TRAPEZOIDAL:
      return "trapezoidal";
  }
  return "?";
}

bool parse_method_list(const std::string& text, std::int64_t k,
                       std::vector<tz_method>* out) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    tz_method method;
    if (!parse_method(token, k, &method)) {
      return false;
    }
    out->push_back(method);
    if (comma == std::string::npos) {
      break;
    }
    pos = comma + 1;
  }
  return !out->empty();
}

bool parse_int_list(const std::string& text, std::vector<std::int64_t>* out) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        std::string_view(text).substr(pos, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - pos);
    std::int64_t v = 0;
    if (!parse_int(token, &v)) {
      return false;
    }
    out->push_back(v);
    if (comma == std::string::npos) {
      break;
    }
    pos = comma + 1;
  }
  return !out->empty();
}

struct CommonFlags {
  double alpha = 0.0;
  std::int64_t n = 0;
  std::string method = "exact";
  std::int64_t k = 2;
  std::string out_path;
  double alpha_guard = 1e-8;
  bool allow_alpha_one = false;

  tz_options options() const {
    return {alpha_guard, allow_alpha_one ? 1 : 0};
  }
};

int cmd_pmf(const CommonFlags& flags, const std::string& ranks_text) {
  tz_method method;
  if (!parse_method(flags.method, flags.k, &method)) {
    std::cerr << "tzeta: unknown method '" << flags.method << "'\n";
    return 2;
  }
  std::vector<std::int64_t> ranks;
  if (!parse_ranks(ranks_text, &ranks)) {
    std::cerr << "tzeta: cannot parse rank list '" << ranks_text << "'\n";
    return 2;
  }
  const tz_options options = flags.options();
  std::vector<double> values(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const tz_status st = tz_approx_pmf(flags.alpha, flags.n, method, &options,
                                       ranks[i], &values[i]);
    if (st != TZ_OK) {
      return fail(st, "pmf");
    }
  }
  Output output;
  if (!output.open(flags.out_path)) {
    std::cerr << "tzeta: cannot open '" << flags.out_path << "'\n";
    return 2;
  }
  std::ostream& os = output.stream();
  os << "rank,pmf\n";
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    os << ranks[i] << ',' << fmt(values[i]) << '\n';
  }
  return 0;
}

int cmd_cdf(const CommonFlags& flags, const std::string& ranks_text) {
  std::vector<std::int64_t> ranks;
  if (!parse_ranks(ranks_text, &ranks)) {
    std::cerr << "tzeta: cannot parse rank list '" << ranks_text << "'\n";
    return 2;
  }
  tz_dist* dist = nullptr;
  tz_status st = tz_dist_create(flags.alpha, flags.n, &dist);
  if (st != TZ_OK) {
    return fail(st, "cdf");
  }
  std::vector<double> values(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    st = tz_dist_cdf(dist, ranks[i], &values[i]);
    if (st != TZ_OK) {
      tz_dist_free(dist);
      return fail(st, "cdf");
    }
  }
  tz_dist_free(dist);
  Output output;
  if (!output.open(flags.out_path)) {
    std::cerr << "tzeta: cannot open '" << flags.out_path << "'\n";
    return 2;
  }
  std::ostream& os = output.stream();
  os << "rank,cdf\n";
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    os << ranks[i] << ',' << fmt(values[i]) << '\n';
  }
  return 0;
}

int cmd_sample(const CommonFlags& flags, std::int64_t count,
               std::uint64_t seed) {
  if (count < 1) {
    std::cerr << "tzeta: --count must be >= 1\n";
    return 2;
  }
  tz_dist* dist = nullptr;
  tz_status st = tz_dist_create(flags.alpha, flags.n, &dist);
  if (st != TZ_OK) {
    return fail(st, "sample");
  }
  tz_rng* rng = tz_rng_create(seed);
  if (rng == nullptr) {
    tz_dist_free(dist);
    return fail(TZ_ERR_INTERNAL, "sample");
  }
  Output output;
  if (!output.open(flags.out_path)) {
    tz_rng_free(rng);
    tz_dist_free(dist);
    std::cerr << "tzeta: cannot open '" << flags.out_path << "'\n";
    return 2;
  }
  std::ostream& os = output.stream();
  for (std::int64_t i = 0; i < count; ++i) {
    std::int64_t rank = 0;
    st = tz_dist_sample(dist, rng, &rank);
    if (st != TZ_OK) {
      tz_rng_free(rng);
      tz_dist_free(dist);
      return fail(st, "sample");
    }
    os << rank << '\n';
  }
  tz_rng_free(rng);
  tz_dist_free(dist);
  return 0;
}

int cmd_moment(const CommonFlags& flags, std::int64_t m) {
  tz_dist* dist = nullptr;
  tz_status st = tz_dist_create(flags.alpha, flags.n, &dist);
  if (st != TZ_OK) {
    return fail(st, "moment");
  }
  double value = 0.0;
  st = tz_dist_moment(dist, m, &value);
  tz_dist_free(dist);
  if (st != TZ_OK) {
    return fail(st, "moment");
  }
  Output output;
  if (!output.open(flags.out_path)) {
    std::cerr << "tzeta: cannot open '" << flags.out_path << "'\n";
    return 2;
  }
  output.stream() << "m,moment\n" << m << ',' << fmt(value) << '\n';
  return 0;
}

struct SweepFlags {
  double alpha_min = 0.1;
  double alpha_max = 2.0;
  double alpha_step = 0.01;
  std::string n_list = "100,1000,10000";
  std::string methods = "integral,avg-integral,trapezoidal";
  std::int64_t k = 2;
  double guard_exclusion = 0.05;
  double alpha_guard = 1e-8;
  bool allow_alpha_one = false;
  std::string out_path;
};

int cmd_error_sweep(const SweepFlags& flags) {
  std::vector<std::int64_t> n_values;
  if (!parse_int_list(flags.n_list, &n_values)) {
    std::cerr << "tzeta: cannot parse --n-list '" << flags.n_list << "'\n";
    return 2;
  }
  std::vector<tz_method> methods;
  if (!parse_method_list(flags.methods, flags.k, &methods)) {
    std::cerr << "tzeta: cannot parse --methods '" << flags.methods << "'\n";
    return 2;
  }
  tz_sweep_grid grid;
  grid.alpha_min = flags.alpha_min;
  grid.alpha_max = flags.alpha_max;
  grid.alpha_step = flags.alpha_step;
  grid.guard_exclusion = flags.guard_exclusion;
  grid.n_values = n_values.data();
  grid.n_count = n_values.size();
  grid.methods = methods.data();
  grid.method_count = methods.size();
  grid.options = {flags.alpha_guard, flags.allow_alpha_one ? 1 : 0};

  tz_sweep_result* result = nullptr;
  const tz_status st = tz_sweep_run(&grid, &result);
  if (st != TZ_OK) {
    return fail(st, "error-sweep");
  }
  Output output;
  if (!output.open(flags.out_path)) {
    tz_sweep_result_free(result);
    std::cerr << "tzeta: cannot open '" << flags.out_path << "'\n";
    return 2;
  }
  std::ostream& os = output.stream();
  os << "method,k,n,alpha,epsilon\n";
  const tz_sweep_record* records = tz_sweep_result_data(result);
  const std::size_t size = tz_sweep_result_size(result);
  for (std::size_t i = 0; i < size; ++i) {
    const tz_sweep_record& rec = records[i];
    os << method_name(rec.method.kind) << ',' << rec.method.k << ',' << rec.n
       << ',' << fmt(rec.alpha) << ',' << fmt(rec.epsilon) << '\n';
  }
  tz_sweep_result_free(result);
  return 0;
}

int cmd_bench(const CommonFlags& flags, const std::string& methods_text,
              std::int64_t iterations) {
  if (iterations < 1) {
    std::cerr << "tzeta: --iterations must be >= 1\n";
    return 2;
  }
  std::vector<tz_method> methods;
  if (!parse_method_list(methods_text, flags.k, &methods)) {
    std::cerr << "tzeta: cannot parse --methods '" << methods_text << "'\n";
    return 2;
  }
  const tz_options options = flags.options();

  // Validate every method before timing anything.
  for (const tz_method& method : methods) {
    double value = 0.0;
    const tz_status st =
        tz_approx_sum(flags.alpha, flags.n, method, &options, &value);
    if (st != TZ_OK) {
      return fail(st, "bench");
    }
  }

  Output output;
  if (!output.open(flags.out_path)) {
    std::cerr << "tzeta: cannot open '" << flags.out_path << "'\n";
    return 2;
  }
  std::ostream& os = output.stream();
  os << "method,n,ns_per_eval\n";
  double sink = 0.0;
  for (const tz_method& method : methods) {
    const auto start = std::chrono::steady_clock::now();
    for (std::int64_t i = 0; i < iterations; ++i) {
      double value = 0.0;
      tz_approx_sum(flags.alpha, flags.n, method, &options, &value);
      sink += value;
    }
    const auto stop = std::chrono::steady_clock::now();
    const double total_ns =
        std::chrono::duration<double, std::nano>(stop - start).count();
    os << method_name(method.kind) << ',' << flags.n << ','
       << fmt(total_ns / static_cast<double>(iterations)) << '\n';
  }
  if (!std::isfinite(sink)) {
    std::cerr << "tzeta: bench produced non-finite sums\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated Zeta (generalized Zipf) distribution toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tz_version());

  CommonFlags flags;
  std::string ranks_text;
  std::int64_t count = 0;
  std::uint64_t seed = 0;
  std::int64_t m = 1;
  std::string bench_methods = "exact,integral,avg-integral,trapezoidal";
  std::int64_t iterations = 1000;
  SweepFlags sweep;

  const auto add_model_flags = [&](CLI::App* cmd, bool with_method) {
    cmd->add_option("--alpha", flags.alpha, "Zipf exponent (alpha >= 0)")
        ->required();
    cmd->add_option("--n", flags.n, "number of species")->required();
    if (with_method) {
      cmd->add_option("--method", flags.method,
                      "exact|integral|avg-integral|trapezoidal")
          ->capture_default_str();
      cmd->add_option("--k", flags.k, "trapezoidal cut point (k in [2, n])")
          ->capture_default_str();
      cmd->add_option("--alpha-guard", flags.alpha_guard,
                      "half-width of the guard band around alpha = 1")
          ->capture_default_str();
      cmd->add_flag("--allow-alpha-one", flags.allow_alpha_one,
                    "evaluate the alpha->1 limit inside the guard band");
    }
    cmd->add_option("--out", flags.out_path, "output path (default stdout)");
  };

  CLI::App* pmf = app.add_subcommand("pmf", "probability of selected ranks");
  add_model_flags(pmf, true);
  pmf->add_option("--ranks", ranks_text, "rank list, e.g. 1-10 or 1,5,9")
      ->required();

  CLI::App* cdf = app.add_subcommand("cdf", "exact cdf of selected ranks");
  add_model_flags(cdf, false);
  cdf->add_option("--ranks", ranks_text, "rank list, e.g. 1-10 or 1,5,9")
      ->required();

  CLI::App* sample =
      app.add_subcommand("sample", "draw random ranks, one per line");
  add_model_flags(sample, false);
  sample->add_option("--count", count, "number of draws")->required();
  sample->add_option("--seed", seed, "rng seed")->capture_default_str();

  CLI::App* moment = app.add_subcommand("moment", "m-th raw moment E[X^m]");
  add_model_flags(moment, false);
  moment->add_option("--m", m, "moment order (m >= 1)")
      ->capture_default_str();

  CLI::App* sweep_cmd = app.add_subcommand(
      "error-sweep", "relative error of the closed forms over a grid");
  sweep_cmd->add_option("--alpha-min", sweep.alpha_min, "")
      ->capture_default_str();
  sweep_cmd->add_option("--alpha-max", sweep.alpha_max, "")
      ->capture_default_str();
  sweep_cmd->add_option("--alpha-step", sweep.alpha_step, "")
      ->capture_default_str();
  sweep_cmd->add_option("--n-list", sweep.n_list, "comma list of n values")
      ->capture_default_str();
  sweep_cmd
      ->add_option("--methods", sweep.methods,
                   "comma list of integral|avg-integral|trapezoidal")
      ->capture_default_str();
  sweep_cmd->add_option("--k", sweep.k, "k for trapezoidal entries")
      ->capture_default_str();
  sweep_cmd
      ->add_option("--guard-exclusion", sweep.guard_exclusion,
                   "half-width of the skipped band around alpha = 1")
      ->capture_default_str();
  sweep_cmd->add_option("--alpha-guard", sweep.alpha_guard, "")
      ->capture_default_str();
  sweep_cmd->add_flag("--allow-alpha-one", sweep.allow_alpha_one, "");
  sweep_cmd->add_option("--out", sweep.out_path,
                        "output path (default stdout)");

  CLI::App* bench = app.add_subcommand(
      "bench", "mean evaluation time per method, ns per call");
  add_model_flags(bench, false);
  bench->add_option("--methods", bench_methods, "comma list of methods")
      ->capture_default_str();
  bench->add_option("--k", flags.k, "k for trapezoidal entries")
      ->capture_default_str();
  bench->add_option("--alpha-guard", flags.alpha_guard, "")
      ->capture_default_str();
  bench->add_flag("--allow-alpha-one", flags.allow_alpha_one, "");
  bench->add_option("--iterations", iterations, "evaluations per method")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(pmf)) {
      return cmd_pmf(flags, ranks_text);
    }
    if (app.got_subcommand(cdf)) {
      return cmd_cdf(flags, ranks_text);
    }
    if (app.got_subcommand(sample)) {
      return cmd_sample(flags, count, seed);
    }
    if (app.got_subcommand(moment)) {
      return cmd_moment(flags, m);
    }
    if (app.got_subcommand(sweep_cmd)) {
      return cmd_error_sweep(sweep);
    }
    if (app.got_subcommand(bench)) {
      return cmd_bench(flags, bench_methods, iterations);
    }
  } catch (const std::exception& e) {
    std::cerr << "tzeta: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
