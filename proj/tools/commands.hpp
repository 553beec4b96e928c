// Copyright 2026 The bidual authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIDUAL_TOOLS_COMMANDS_HPP
#define BIDUAL_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bidual::cli {

// Exit codes shared by every subcommand; scripted pipelines rely on them.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitUnbounded = 3;

// Entries with |x_i| below this are hidden from vector displays.
inline constexpr double kDisplayTol = 1e-8;

// Options for the problem-file commands (solve, bound, oracle, verify).
// Empty strings / negative numbers mean "no override".
struct ProblemOptions {
  std::string file;
  std::string box_override;   // positive number or "conservative"
  std::string mode_override;  // "entry" | "group" | "mixed"
  double gamma = -1.0;
  std::int64_t budget_subsets = -1;  // oracle/verify only
};

struct SweepOptions {
  int rows = 32;
  int cols = 64;
  std::vector<int> grid = {1, 4, 7, 10, 13, 16};
  std::vector<double> multipliers = {1.0, 2.0, 5.0};
  int trials = 50;
  std::uint64_t seed = 0;
  int threads = 1;
  bool summary = false;  // JSON quantile summary instead of the raw CSV
};

struct ClassifyOptions {
  int classes = 4;
  int class_columns = 3;
  int rows = 30;
  double rho = 0.1;
  double gamma = 0.01;
  int trials = 100;
  std::uint64_t seed = 0;
  double energy_threshold = 0.05;
  double dictionary_scale = 10.0;
  int threads = 1;
};

// Each command writes its report to `out`, diagnostics and errors to `err`,
// and returns one of the exit codes above. The BIDUAL_LOG environment
// variable ("info" or "debug") turns on progress logging on `err`.
int cmd_solve(const ProblemOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bound(const ProblemOptions& opts, std::ostream& out, std::ostream& err);
int cmd_oracle(const ProblemOptions& opts, std::ostream& out,
               std::ostream& err);
int cmd_verify(const ProblemOptions& opts, std::ostream& out,
               std::ostream& err);
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);
int cmd_classify(const ClassifyOptions& opts, std::ostream& out,
                 std::ostream& err);

}  // namespace bidual::cli

#endif  // BIDUAL_TOOLS_COMMANDS_HPP
