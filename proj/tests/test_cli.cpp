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

// End-to-end tests of the CLI. The binary path comes from the TZETA_CLI
// environment variable, set by the test harness.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* binary = std::getenv("TZETA_CLI");
  REQUIRE_MESSAGE(binary != nullptr, "TZETA_CLI must point at the binary");
  const std::string command =
      std::string(binary) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    fields.push_back(field);
  }
  return fields;
}

}  // namespace

TEST_CASE("pmf of the uniform case") {
  const RunResult r = run_cli("pmf --alpha 0 --n 4 --method exact --ranks 1-4");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "rank,pmf");
  for (int i = 1; i <= 4; ++i) {
    CHECK(lines[static_cast<std::size_t>(i)] ==
          std::to_string(i) + ",0.25");
  }
}

TEST_CASE("pmf at the pinned zipf point") {
  const RunResult r = run_cli("pmf --alpha 1 --n 100 --method exact --ranks 1");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  const auto fields = split_csv(lines[1]);
  REQUIRE(fields.size() == 2);
  CHECK(fields[0] == "1");
  CHECK(std::fabs(std::stod(fields[1]) - 0.19277563597396005) < 1e-12);
}

TEST_CASE("pmf rejects the singular alpha with exit code 2") {
  const RunResult r =
      run_cli("pmf --alpha 1 --n 100 --method integral --ranks 1");
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
}

TEST_CASE("pmf accepts mixed rank lists") {
  const RunResult r =
      run_cli("pmf --alpha 0.5 --n 20 --method exact --ranks 1-3,7,9-10");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 7);
  CHECK(split_csv(lines[1])[0] == "1");
  CHECK(split_csv(lines[4])[0] == "7");
  CHECK(split_csv(lines[6])[0] == "10");
}

TEST_CASE("validation failures exit with 2") {
  CHECK(run_cli("pmf --alpha -1 --n 4 --ranks 1").exit_code == 2);
  CHECK(run_cli("pmf --alpha 0.5 --n 0 --ranks 1").exit_code == 2);
  CHECK(run_cli("pmf --alpha 0.5 --n 4 --ranks 9").exit_code == 2);
  CHECK(run_cli("pmf --alpha 0.5 --n 4 --ranks banana").exit_code == 2);
  CHECK(run_cli("pmf --alpha 0.5 --n 4 --method nope --ranks 1").exit_code ==
        2);
  CHECK(run_cli("pmf --alpha 0.5 --n 100 --method trapezoidal --k 1 "
                "--ranks 1")
            .exit_code == 2);
  CHECK(run_cli("sample --alpha 0.5 --n 4 --count 0").exit_code == 2);
  CHECK(run_cli("bench --alpha 0.5 --n 4 --iterations 0").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("pmf --alpha 0.5").exit_code == 2);  // missing required flags
}

TEST_CASE("cdf reaches one at full support") {
  const RunResult r = run_cli("cdf --alpha 1 --n 100 --ranks 10,100");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "rank,cdf");
  CHECK(std::fabs(std::stod(split_csv(lines[1])[1]) - 0.5646337179062695) <
        1e-12);
  CHECK(std::stod(split_csv(lines[2])[1]) == 1.0);
}

TEST_CASE("sample of a single-point distribution") {
  const RunResult r = run_cli("sample --alpha 2 --n 1 --count 5 --seed 7");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "1\n1\n1\n1\n1\n");
}

TEST_CASE("sample is byte-identical for a fixed seed") {
  const std::string args = "sample --alpha 1 --n 50 --count 2000 --seed 99";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(lines_of(first.out).size() == 2000);
}

TEST_CASE("uniform sample frequencies") {
  const RunResult r =
      run_cli("sample --alpha 0 --n 4 --count 1000000 --seed 1");
  REQUIRE(r.exit_code == 0);
  std::map<std::string, int> counts;
  for (const auto& line : lines_of(r.out)) {
    ++counts[line];
  }
  REQUIRE(counts.size() == 4);
  for (const auto& [rank, count] : counts) {
    CAPTURE(rank);
    CHECK(std::fabs(count / 1e6 - 0.25) < 0.005);
  }
}

TEST_CASE("moment of the uniform case") {
  const RunResult r = run_cli("moment --alpha 0 --n 4 --m 1");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "m,moment");
  CHECK(lines[1] == "1,2.5");
}

TEST_CASE("error sweep default grid shape") {
  const RunResult r = run_cli("error-sweep");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1 + 182 * 3 * 3);
  CHECK(lines[0] == "method,k,n,alpha,epsilon");
  // Pinned ordering: methods in flag order, then n list order, then alpha.
  CHECK(split_csv(lines[1])[0] == "integral");
  CHECK(split_csv(lines[1])[1] == "0");
  CHECK(split_csv(lines[1])[2] == "100");
  const auto last = split_csv(lines.back());
  CHECK(last[0] == "trapezoidal");
  CHECK(last[1] == "2");
  CHECK(last[2] == "10000");
  CHECK(std::stod(last[3]) == 2.0);
}

TEST_CASE("error sweep is deterministic") {
  const std::string args =
      "error-sweep --alpha-min 0.3 --alpha-max 0.8 --alpha-step 0.1 "
      "--n-list 100,1000 --methods integral,trapezoidal --k 3";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(lines_of(first.out).size() == 1 + 6 * 2 * 2);
}

TEST_CASE("trapezoidal k=5 sweep stays below 0.1%") {
  const RunResult r = run_cli("error-sweep --methods trapezoidal --k 5");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1 + 182 * 3);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    REQUIRE(fields.size() == 5);
    CHECK(std::fabs(std::stod(fields[4])) < 0.001);
  }
}

TEST_CASE("integral sweep below alpha 0.6 is small and grows with alpha") {
  const RunResult r =
      run_cli("error-sweep --methods integral --alpha-max 0.6");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1 + 51 * 3);
  std::map<std::string, double> prev;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    const double eps = std::stod(fields[4]);
    CHECK(eps > 0.0);
    CHECK(eps < 0.04);
    auto [it, fresh] = prev.try_emplace(fields[2], eps);
    if (!fresh) {
      CHECK(eps > it->second);  // strictly growing within each n block
      it->second = eps;
    }
  }
}

TEST_CASE("error sweep rejects an all-excluded grid") {
  const RunResult r = run_cli(
      "error-sweep --alpha-min 0.96 --alpha-max 1.04 --alpha-step 0.01");
  CHECK(r.exit_code == 2);
}

TEST_CASE("bench reports finite positive timings") {
  const RunResult r = run_cli(
      "bench --alpha 0.8 --n 10000 --methods integral,trapezoidal "
      "--iterations 100");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "method,n,ns_per_eval");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    REQUIRE(fields.size() == 3);
    const double ns = std::stod(fields[2]);
    CHECK(ns > 0.0);
    CHECK(std::isfinite(ns));
  }
}

TEST_CASE("bench with a single iteration") {
  const RunResult r = run_cli(
      "bench --alpha 0.5 --n 1000 --methods exact --iterations 1");
  REQUIRE(r.exit_code == 0);
  REQUIRE(lines_of(r.out).size() == 2);
}

TEST_CASE("exact evaluation dwarfs the closed form at large n") {
  const RunResult r = run_cli(
      "bench --alpha 0.8 --n 1000000 --methods exact,integral "
      "--iterations 50");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  const double exact_ns = std::stod(split_csv(lines[1])[2]);
  const double integral_ns = std::stod(split_csv(lines[2])[2]);
  CHECK(exact_ns / integral_ns > 100.0);
}

TEST_CASE("--out writes the same bytes a stdout run produces") {
  const std::string path = "/tmp/tzeta_cli_test_out.csv";
  std::remove(path.c_str());
  const RunResult direct = run_cli("pmf --alpha 0.7 --n 10 --ranks 1-10");
  const RunResult to_file =
      run_cli("pmf --alpha 0.7 --n 10 --ranks 1-10 --out " + path);
  REQUIRE(direct.exit_code == 0);
  REQUIRE(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  FILE* f = std::fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::string contents;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) {
    contents.append(buf.data(), got);
  }
  std::fclose(f);
  std::remove(path.c_str());
  CHECK(contents == direct.out);
}
