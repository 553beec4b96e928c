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

#include "bidual/oracle.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bidual/simplex.hpp"

namespace bidual {

namespace {

constexpr double kInfValue = std::numeric_limits<double>::infinity();

double rhs_tol(const ProblemInstance& inst) {
  const double scale = inst.b.size() > 0 ? inst.b.cwiseAbs().maxCoeff() : 0.0;
  return kFeasTol * (1.0 + scale);
}

// Budget bookkeeping, charged once per feasibility test.
struct EnumState {
  explicit EnumState(const OracleBudget& budget)
      : budget(budget), start(std::chrono::steady_clock::now()) {}

  bool charge() {
    if (exceeded) return false;
    if (++tested > budget.max_subsets) {
      exceeded = true;
      return false;
    }
    if ((tested & 63) == 0 && std::isfinite(budget.time_budget_seconds)) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start;
      if (elapsed.count() > budget.time_budget_seconds) {
        exceeded = true;
        return false;
      }
    }
    return true;
  }

  const OracleBudget& budget;
  std::chrono::steady_clock::time_point start;
  std::int64_t tested = 0;
  bool exceeded = false;
};

// Least-squares feasibility of a fixed support; a finite box falls back to a
// simplex feasibility phase restricted to the support columns.
struct SupportCheck {
  bool feasible = false;
  Vector x;  // full-length witness
};

SupportCheck check_support(const ProblemInstance& inst,
                           const std::vector<int>& cols) {
  const int m = inst.rows();
  const double tol = rhs_tol(inst);
  SupportCheck out;
  out.x = Vector::Zero(inst.cols());
  if (cols.empty()) {
    out.feasible = m == 0 || inst.b.cwiseAbs().maxCoeff() <= tol;
    return out;
  }
  Matrix sub(m, static_cast<int>(cols.size()));
  for (int k = 0; k < sub.cols(); ++k) sub.col(k) = inst.A.col(cols[k]);
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(sub);
  Vector xs = cod.solve(inst.b);
  if ((sub * xs - inst.b).cwiseAbs().maxCoeff() > tol) return out;
  if (inst.box.is_finite()) {
    const double M = inst.box.value();
    if (xs.cwiseAbs().maxCoeff() > M + kFeasTol) {
      LinearProgram lp;
      lp.c = Vector::Zero(sub.cols());
      lp.Aeq = sub;
      lp.beq = inst.b;
      lp.lower = Vector::Constant(sub.cols(), -M);
      lp.upper = Vector::Constant(sub.cols(), M);
      const PhaseOneResult ph = phase_one(lp);
      if (ph.status != LpStatus::Optimal) return out;
      xs = ph.x;
    }
  }
  for (int k = 0; k < sub.cols(); ++k) out.x[cols[k]] = xs[k];
  out.feasible = true;
  return out;
}

// Advances a size-|idx| combination over [0, n) in lexicographic order.
bool next_combination(std::vector<int>& idx, int n) {
  const int c = static_cast<int>(idx.size());
  for (int i = c - 1; i >= 0; --i) {
    if (idx[i] < n - c + i) {
      ++idx[i];
      for (int j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int c) {
  std::vector<int> idx(c);
  for (int i = 0; i < c; ++i) idx[i] = i;
  return idx;
}

OracleResult not_found(bool exhaustive) {
  OracleResult out;
  out.value = kInfValue;
  out.exhaustive = exhaustive;
  return out;
}

OracleResult found(double value, std::vector<int> support, Vector witness) {
  OracleResult out;
  out.value = value;
  out.support = std::move(support);
  out.witness_x = std::move(witness);
  out.exhaustive = true;
  return out;
}

}  // namespace

OracleResult oracle_entry(const ProblemInstance& instance,
                          const OracleBudget& budget) {
  const int n = instance.cols();
  if (n > budget.max_entries) {
    throw std::invalid_argument("oracle_entry: n exceeds budget.max_entries");
  }
  EnumState state(budget);
  for (int c = 0; c <= n; ++c) {
    std::vector<int> idx = first_combination(c);
    do {
      if (!state.charge()) return not_found(false);
      const SupportCheck chk = check_support(instance, idx);
      if (chk.feasible) return found(c, idx, chk.x);
    } while (next_combination(idx, n));
  }
  return not_found(true);
}

OracleResult oracle_group(const ProblemInstance& instance,
                          const OracleBudget& budget) {
  const int K = instance.partition.num_blocks();
  if (K > budget.max_blocks) {
    throw std::invalid_argument("oracle_group: K exceeds budget.max_blocks");
  }
  EnumState state(budget);
  for (int c = 0; c <= K; ++c) {
    std::vector<int> blocks = first_combination(c);
    do {
      if (!state.charge()) return not_found(false);
      std::vector<int> cols;
      for (const int k : blocks) {
        const int begin = instance.partition.begin_of(k);
        for (int i = begin; i < begin + instance.partition.size_of(k); ++i) {
          cols.push_back(i);
        }
      }
      const SupportCheck chk = check_support(instance, cols);
      if (chk.feasible) return found(c, cols, chk.x);
    } while (next_combination(blocks, K));
  }
  return not_found(true);
}

OracleResult oracle_mixed(const ProblemInstance& instance, double gamma,
                          const OracleBudget& budget) {
  const int K = instance.partition.num_blocks();
  const int m = instance.rows();
  if (K < 2 || instance.partition.size_of(K - 1) != m) {
    throw std::invalid_argument(
        "oracle_mixed: last block must be the size-m error block");
  }
  if (gamma < 0.0) throw std::invalid_argument("oracle_mixed: gamma must be >= 0");
  const int x_blocks = K - 1;
  if (x_blocks > budget.max_blocks || m > budget.max_entries) {
    throw std::invalid_argument("oracle_mixed: instance exceeds budget caps");
  }
  const int err_begin = instance.partition.begin_of(K - 1);
  EnumState state(budget);

  OracleResult best = not_found(true);
  for (int bc = 0; bc <= x_blocks; ++bc) {
    if (bc >= best.value) break;  // error entries only add cost
    std::vector<int> blocks = first_combination(bc);
    do {
      std::vector<int> x_cols;
      for (const int k : blocks) {
        const int begin = instance.partition.begin_of(k);
        for (int i = begin; i < begin + instance.partition.size_of(k); ++i) {
          x_cols.push_back(i);
        }
      }
      for (int ec = 0; ec <= m; ++ec) {
        const double obj = bc + gamma * ec;
        if (obj >= best.value) break;
        bool blocked = false;
        std::vector<int> err = first_combination(ec);
        do {
          if (!state.charge()) {
            best.exhaustive = false;
            return best;
          }
          std::vector<int> cols = x_cols;
          for (const int e : err) cols.push_back(err_begin + e);
          const SupportCheck chk = check_support(instance, cols);
          if (chk.feasible) {
            best = found(obj, cols, chk.x);
            blocked = true;  // larger error supports cost strictly more
            break;
          }
        } while (next_combination(err, m));
        if (blocked) break;
      }
    } while (next_combination(blocks, x_blocks));
  }
  return best;
}

OracleResult weighted_oracle(const ProblemInstance& instance,
                             const OracleBudget& budget) {
  const int n = instance.cols();
  const int K = instance.partition.num_blocks();
  if (n > budget.max_entries) {
    throw std::invalid_argument("weighted_oracle: n exceeds budget.max_entries");
  }
  EnumState state(budget);
  OracleResult best = not_found(true);
  std::vector<int> block_count(K);
  for (int c = 0; c <= n && best.value > 0.0; ++c) {
    std::vector<int> idx = first_combination(c);
    do {
      std::fill(block_count.begin(), block_count.end(), 0);
      for (const int i : idx) ++block_count[instance.partition.block_of(i)];
      double obj = 0.0;
      for (int k = 0; k < K; ++k) {
        if (block_count[k] > 0) {
          obj += instance.alpha[k] + instance.beta[k] * block_count[k];
        }
      }
      if (obj >= best.value) continue;  // cannot strictly improve
      if (!state.charge()) {
        best.exhaustive = false;
        return best;
      }
      const SupportCheck chk = check_support(instance, idx);
      if (chk.feasible) best = found(obj, idx, chk.x);
    } while (next_combination(idx, n));
  }
  return best;
}

}  // namespace bidual
