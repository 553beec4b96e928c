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

#ifndef BIDUAL_BENCH_HPP
#define BIDUAL_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bidual/problem.hpp"

namespace bidual {

// Configuration of the bound sweep over planted sparsity levels. Desk-scale
// defaults; the study-size run is the same code with bigger numbers.
struct SweepConfig {
  int m = 32;
  int n = 64;
  std::vector<int> sparsity_grid = {1, 4, 7, 10, 13, 16};
  std::vector<double> M_multipliers = {1.0, 2.0, 5.0};
  int trials = 50;
  std::uint64_t rng_seed = 0;
  int threads = 1;  // trials are independent; output order is canonical
};

struct SweepRecord {
  int trial = 0;
  int true_sparsity = 0;
  double M_multiplier = 1.0;
  double bound = 0.0;
  double ratio = 0.0;  // bound / true_sparsity, 0 when the truth is 0
  std::string status;  // "optimal", "infeasible", or "error"
  double wall_ms = 0.0;
};

// Synthetic classification stand-in: K Gaussian class dictionaries of d
// columns each, queries with a fraction rho of corrupted entries, solved via
// the conservative mixed bidual and classified by least block residual.
struct ClassifyConfig {
  int num_classes = 4;   // K
  int class_columns = 3; // d, columns per class block
  int m = 30;
  double corruption = 0.1;  // rho, fraction of entries of b replaced
  double gamma = 0.01;
  int trials = 100;
  std::uint64_t rng_seed = 0;
  // A block takes part in classification only when ||x_k||_2 exceeds this.
  double block_energy_threshold = 0.05;
  // Class dictionaries are scaled up so the degenerate e = b solution is not
  // the cheapest one at small gamma (images have large pixel scale for the
  // same reason).
  double dictionary_scale = 10.0;
  int threads = 1;
};

struct ClassificationReport {
  int trials = 0;
  int correct = 0;
  int failures = 0;
  double accuracy = 0.0;
  double mean_group_sparsity = 0.0;  // active x blocks per solved query
  double mean_error_sparsity = 0.0;  // active e entries per solved query
};

struct GeneratedInstance {
  ProblemInstance instance;  // entry-wise preset, conservative box
  Vector x0;
  double M0 = 1.0;  // ||x0||_inf, defined as 1 when s = 0
};

// Gaussian dictionary with a planted s-sparse Gaussian x0 and b = A x0.
// Deterministic in (m, n, s, seed).
GeneratedInstance gen_instance(int m, int n, int s, std::uint64_t seed);

// One record per (sparsity, trial, M multiplier), canonically ordered,
// deterministic in the config apart from the wall_ms column. Per-record
// failures are recorded in status, not thrown.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

ClassificationReport run_classify(const ClassifyConfig& config);

// Fixed header: trial,sparsity,multiplier,bound,truth,ratio,status,ms
std::string sweep_to_csv(const std::vector<SweepRecord>& records);

// Per-(sparsity, multiplier) cell quantiles (min, q25, median, q75, max) of
// bound and ratio, as a JSON document.
std::string sweep_summary_json(const SweepConfig& config,
                               const std::vector<SweepRecord>& records);

std::string classify_report_json(const ClassifyConfig& config,
                                 const ClassificationReport& report);

}  // namespace bidual

#endif  // BIDUAL_BENCH_HPP
