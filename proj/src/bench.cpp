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

#include "bidual/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bidual/certify.hpp"
#include "bidual/random.hpp"
#include "bidual/relax.hpp"
#include "json.hpp"

namespace bidual {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Runs items [0, count) on up to `threads` workers. Work must write to
// disjoint slots; callers reassemble results in canonical order.
void parallel_for(int count, int threads, const std::function<void(int)>& work) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<int> next{0};
  auto drain = [&]() {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
  };
  std::vector<std::thread> pool;
  const int workers = std::min(threads, count);
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
  drain();
  for (auto& t : pool) t.join();
}

std::vector<int> pick_positions(Rng& rng, int n, int count) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  for (int i = 0; i < count; ++i) {
    std::swap(idx[i], idx[rng.uniform_int(i, n - 1)]);
  }
  idx.resize(count);
  return idx;
}

void check_sweep_config(const SweepConfig& config) {
  if (config.m < 1 || config.n < 1) {
    throw std::invalid_argument("sweep: m and n must be positive");
  }
  if (config.trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
  if (config.sparsity_grid.empty()) {
    throw std::invalid_argument("sweep: empty sparsity grid");
  }
  for (const int s : config.sparsity_grid) {
    if (s < 0 || s > config.n) {
      throw std::invalid_argument("sweep: sparsity levels must lie in [0, n]");
    }
  }
  if (config.M_multipliers.empty()) {
    throw std::invalid_argument("sweep: empty multiplier list");
  }
  for (const double mult : config.M_multipliers) {
    if (!(mult > 0.0)) {
      throw std::invalid_argument("sweep: multipliers must be positive");
    }
  }
}

void check_classify_config(const ClassifyConfig& config) {
  if (config.num_classes < 1 || config.class_columns < 1 || config.m < 1) {
    throw std::invalid_argument("classify: dimensions must be positive");
  }
  if (!(config.corruption >= 0.0 && config.corruption < 1.0)) {
    throw std::invalid_argument("classify: corruption must lie in [0, 1)");
  }
  if (config.gamma < 0.0) {
    throw std::invalid_argument("classify: gamma must be >= 0");
  }
  if (config.trials < 1) {
    throw std::invalid_argument("classify: trials must be >= 1");
  }
  if (config.block_energy_threshold < 0.0) {
    throw std::invalid_argument("classify: energy threshold must be >= 0");
  }
  if (!(config.dictionary_scale > 0.0)) {
    throw std::invalid_argument("classify: dictionary scale must be positive");
  }
}

// Type-7 quantile of an ascending sample.
double quantile(const std::vector<double>& sorted, double p) {
  const int n = static_cast<int>(sorted.size());
  if (n == 1) return sorted[0];
  const double h = (n - 1) * p;
  const int lo = static_cast<int>(std::floor(h));
  const int hi = std::min(lo + 1, n - 1);
  return sorted[lo] + (h - lo) * (sorted[hi] - sorted[lo]);
}

nlohmann::json five_number_summary(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return {{"min", values.front()},
          {"q25", quantile(values, 0.25)},
          {"median", quantile(values, 0.5)},
          {"q75", quantile(values, 0.75)},
          {"max", values.back()}};
}

}  // namespace

GeneratedInstance gen_instance(int m, int n, int s, std::uint64_t seed) {
  if (m < 1 || n < 1 || s < 0 || s > n) {
    throw std::invalid_argument("gen_instance: need m,n >= 1 and 0 <= s <= n");
  }
  Rng rng(seed);
  Matrix A(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) A(i, j) = rng.normal();
  }
  Vector x0 = Vector::Zero(n);
  if (s > 0) {
    for (const int pos : pick_positions(rng, n, s)) x0[pos] = rng.normal();
  }
  double M0 = s > 0 ? x0.cwiseAbs().maxCoeff() : 1.0;
  if (M0 <= 0.0) M0 = 1.0;  // all-zero draw, measure-zero fallback
  Vector b = A * x0;
  return GeneratedInstance{
      make_instance(std::move(A), std::move(b), BlockPartition::singletons(n),
                    SparsityMode::entry_wise(), BoxBound::conservative()),
      std::move(x0), M0};
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  check_sweep_config(config);
  const int num_levels = static_cast<int>(config.sparsity_grid.size());
  const int num_mults = static_cast<int>(config.M_multipliers.size());
  std::vector<SweepRecord> records(num_levels * config.trials * num_mults);

  parallel_for(num_levels * config.trials, config.threads, [&](int item) {
    const int level = item / config.trials;
    const int trial = item % config.trials;
    const int s = config.sparsity_grid[level];
    const GeneratedInstance gen =
        gen_instance(config.m, config.n, s,
                     derive_seed(config.rng_seed, static_cast<std::uint64_t>(s),
                                 static_cast<std::uint64_t>(trial)));
    for (int mi = 0; mi < num_mults; ++mi) {
      const double mult = config.M_multipliers[mi];
      ProblemInstance boxed = gen.instance;
      boxed.box = BoxBound::finite(mult * gen.M0);

      SweepRecord rec;
      rec.trial = trial;
      rec.true_sparsity = s;
      rec.M_multiplier = mult;
      const auto start = Clock::now();
      try {
        rec.bound = lower_bound(boxed).bound;
        rec.status = "optimal";
      } catch (const InfeasibleRelaxation&) {
        rec.status = "infeasible";
      } catch (const std::exception&) {
        rec.status = "error";
      }
      rec.wall_ms = elapsed_ms(start);
      rec.ratio = s > 0 ? rec.bound / s : 0.0;
      records[(level * config.trials + trial) * num_mults + mi] = rec;
    }
  });
  return records;
}

ClassificationReport run_classify(const ClassifyConfig& config) {
  check_classify_config(config);
  const int K = config.num_classes;
  const int d = config.class_columns;
  const int m = config.m;

  struct TrialOutcome {
    bool solved = false;
    bool correct = false;
    int active_blocks = 0;
    int active_errors = 0;
  };
  std::vector<TrialOutcome> outcomes(config.trials);

  parallel_for(config.trials, config.threads, [&](int trial) {
    Rng rng(derive_seed(config.rng_seed, 0x636c6679u,
                        static_cast<std::uint64_t>(trial)));
    Matrix A(m, K * d);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < K * d; ++j) {
        A(i, j) = config.dictionary_scale * rng.normal();
      }
    }
    const int truth = rng.uniform_int(0, K - 1);
    Vector coef(d);
    for (int j = 0; j < d; ++j) coef[j] = rng.normal();
    const Vector clean = A.middleCols(truth * d, d) * coef;

    Vector b = clean;
    const int corrupted = static_cast<int>(std::lround(config.corruption * m));
    if (corrupted > 0) {
      const double scale =
          std::max(1e-6, clean.cwiseAbs().maxCoeff());
      for (const int pos : pick_positions(rng, m, corrupted)) {
        b[pos] += scale * rng.normal();
      }
    }

    const auto inst = make_mixed_instance(
        A, b, BlockPartition(std::vector<int>(K, d)), config.gamma,
        BoxBound::conservative());
    RelaxationSolution sol;
    try {
      sol = solve_bidual(inst);
    } catch (const std::exception&) {
      return;  // recorded as a per-trial failure
    }
    if (sol.status != SolveStatus::Optimal) return;

    TrialOutcome& out = outcomes[trial];
    out.solved = true;
    std::vector<int> candidates;
    for (int k = 0; k < K; ++k) {
      if (sol.x.segment(k * d, d).norm() > config.block_energy_threshold) {
        candidates.push_back(k);
        ++out.active_blocks;
      }
    }
    if (candidates.empty()) {
      for (int k = 0; k < K; ++k) candidates.push_back(k);
    }
    int predicted = candidates.front();
    double best = std::numeric_limits<double>::infinity();
    for (const int k : candidates) {
      const double residual =
          (b - A.middleCols(k * d, d) * sol.x.segment(k * d, d)).norm();
      if (residual < best) {
        best = residual;
        predicted = k;
      }
    }
    out.correct = predicted == truth;
    const double zero_tol = auto_zero_tol(sol.x);
    for (int i = 0; i < m; ++i) {
      if (std::abs(sol.x[K * d + i]) > zero_tol) ++out.active_errors;
    }
  });

  ClassificationReport report;
  report.trials = config.trials;
  int solved = 0;
  for (const TrialOutcome& out : outcomes) {
    if (!out.solved) {
      ++report.failures;
      continue;
    }
    ++solved;
    if (out.correct) ++report.correct;
    report.mean_group_sparsity += out.active_blocks;
    report.mean_error_sparsity += out.active_errors;
  }
  if (solved > 0) {
    report.accuracy = static_cast<double>(report.correct) / solved;
    report.mean_group_sparsity /= solved;
    report.mean_error_sparsity /= solved;
  }
  return report;
}

std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream os;
  os << "trial,sparsity,multiplier,bound,truth,ratio,status,ms\n";
  os << std::setprecision(12);
  for (const SweepRecord& rec : records) {
    os << rec.trial << ',' << rec.true_sparsity << ',' << rec.M_multiplier
       << ',' << rec.bound << ',' << rec.true_sparsity << ',' << rec.ratio
       << ',' << rec.status << ',' << rec.wall_ms << '\n';
  }
  return os.str();
}

std::string sweep_summary_json(const SweepConfig& config,
                               const std::vector<SweepRecord>& records) {
  nlohmann::json doc;
  doc["config"] = {{"m", config.m},
                   {"n", config.n},
                   {"sparsity_grid", config.sparsity_grid},
                   {"M_multipliers", config.M_multipliers},
                   {"trials", config.trials},
                   {"rng_seed", config.rng_seed}};
  doc["cells"] = nlohmann::json::array();
  for (const int s : config.sparsity_grid) {
    for (const double mult : config.M_multipliers) {
      std::vector<double> bounds, ratios;
      int failures = 0;
      for (const SweepRecord& rec : records) {
        if (rec.true_sparsity != s || rec.M_multiplier != mult) continue;
        if (rec.status == "optimal") {
          bounds.push_back(rec.bound);
          ratios.push_back(rec.ratio);
        } else {
          ++failures;
        }
      }
      nlohmann::json cell = {{"sparsity", s},
                             {"multiplier", mult},
                             {"solved", static_cast<int>(bounds.size())},
                             {"failed", failures}};
      if (!bounds.empty()) {
        cell["bound"] = five_number_summary(std::move(bounds));
        cell["ratio"] = five_number_summary(std::move(ratios));
      }
      doc["cells"].push_back(std::move(cell));
    }
  }
  return doc.dump(2);
}

std::string classify_report_json(const ClassifyConfig& config,
                                 const ClassificationReport& report) {
  nlohmann::json doc;
  doc["config"] = {{"num_classes", config.num_classes},
                   {"class_columns", config.class_columns},
                   {"m", config.m},
                   {"corruption", config.corruption},
                   {"gamma", config.gamma},
                   {"trials", config.trials},
                   {"rng_seed", config.rng_seed},
                   {"block_energy_threshold", config.block_energy_threshold},
                   {"dictionary_scale", config.dictionary_scale}};
  doc["report"] = {{"trials", report.trials},
                   {"correct", report.correct},
                   {"failures", report.failures},
                   {"accuracy", report.accuracy},
                   {"mean_group_sparsity", report.mean_group_sparsity},
                   {"mean_error_sparsity", report.mean_error_sparsity}};
  return doc.dump(2);
}

}  // namespace bidual
