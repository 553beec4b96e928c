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

#include "bidual/relax.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace bidual {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_valid(const ProblemInstance& instance) {
  const auto violations = validate(instance);
  if (!violations.empty()) {
    throw std::invalid_argument("invalid instance: " + violations.front());
  }
}

}  // namespace

BidualEncoding build_bidual_lp(const ProblemInstance& instance) {
  require_valid(instance);
  const int m = instance.rows();
  const int n = instance.cols();
  const int K = instance.partition.num_blocks();
  const bool boxed = instance.box.is_finite();
  const double M = boxed ? instance.box.value() : 0.0;
  const double scale = boxed ? 1.0 / M : 1.0;

  BidualEncoding enc{LinearProgram{}, instance.partition, instance.alpha,
                     instance.beta,   scale,              {},
                     {},              {}};
  enc.x_plus.resize(n);
  enc.x_minus.resize(n);
  enc.t_col.assign(K, -1);

  int epi_rows = 0;
  int t_count = 0;
  for (int k = 0; k < K; ++k) {
    if (instance.alpha[k] > 0.0) {
      ++t_count;
      epi_rows += instance.partition.size_of(k);
    }
  }
  const int box_rows = boxed ? n : 0;
  const int cols = 2 * n + t_count + epi_rows + box_rows;
  const int rows = m + epi_rows + box_rows;

  LinearProgram& lp = enc.lp;
  lp.c = Vector::Zero(cols);
  lp.Aeq = Matrix::Zero(rows, cols);
  lp.beq = Vector::Zero(rows);
  lp.lower = Vector::Zero(cols);
  lp.upper = Vector::Constant(cols, kInf);
  lp.column_labels.assign(cols, "");

  const Vector beta_entry = instance.expanded_beta();
  for (int i = 0; i < n; ++i) {
    enc.x_plus[i] = i;
    enc.x_minus[i] = n + i;
    lp.c[i] = scale * beta_entry[i];
    lp.c[n + i] = scale * beta_entry[i];
    lp.column_labels[i] = "x+_" + std::to_string(i);
    lp.column_labels[n + i] = "x-_" + std::to_string(i);
    lp.Aeq.block(0, i, m, 1) = instance.A.col(i);
    lp.Aeq.block(0, n + i, m, 1) = -instance.A.col(i);
  }
  lp.beq.head(m) = instance.b;

  int next_col = 2 * n;
  int next_row = m;
  for (int k = 0; k < K; ++k) {
    if (!(instance.alpha[k] > 0.0)) continue;
    const int tc = next_col++;
    enc.t_col[k] = tc;
    lp.c[tc] = scale * instance.alpha[k];
    lp.column_labels[tc] = "t_" + std::to_string(k);
    const int begin = instance.partition.begin_of(k);
    for (int i = begin; i < begin + instance.partition.size_of(k); ++i) {
      // x+_i + x-_i - t_k + slack = 0
      lp.Aeq(next_row, i) = 1.0;
      lp.Aeq(next_row, n + i) = 1.0;
      lp.Aeq(next_row, tc) = -1.0;
      ++next_row;
    }
  }
  // Epigraph slack columns, then box rows with their slacks.
  for (int r = m; r < m + epi_rows; ++r) {
    lp.Aeq(r, next_col) = 1.0;
    lp.column_labels[next_col] = "epi_slack_" + std::to_string(r - m);
    ++next_col;
  }
  if (boxed) {
    for (int i = 0; i < n; ++i) {
      lp.Aeq(next_row, i) = 1.0;
      lp.Aeq(next_row, n + i) = 1.0;
      lp.Aeq(next_row, next_col) = 1.0;
      lp.beq[next_row] = M;
      lp.column_labels[next_col] = "box_slack_" + std::to_string(i);
      ++next_row;
      ++next_col;
    }
  }
  return enc;
}

LinearProgram build_dual_lp(const ProblemInstance& instance) {
  require_valid(instance);
  if (!instance.box.is_finite()) throw ConservativeMNotSupported();
  const int m = instance.rows();
  const int n = instance.cols();
  const int K = instance.partition.num_blocks();
  const double inv_m = 1.0 / instance.box.value();

  // Columns: lambda3 (m, free), lambda4 (n, >=0), lambda5 (n, >=0),
  // lambda6 (K, <=0), lambda7 (n, <=0), then one slack per row.
  const int l3 = 0, l4 = m, l5 = m + n, l6 = m + 2 * n, l7 = m + 2 * n + K;
  const int base = m + 3 * n + K;
  const int rows = K + n + 2 * n;
  const int cols = base + rows;

  LinearProgram lp;
  lp.c = Vector::Zero(cols);
  lp.Aeq = Matrix::Zero(rows, cols);
  lp.beq = Vector::Zero(rows);
  lp.lower = Vector::Zero(cols);
  lp.upper = Vector::Constant(cols, kInf);
  lp.column_labels.assign(cols, "");

  for (int i = 0; i < m; ++i) {
    lp.c[l3 + i] = -instance.b[i];  // negated maximization
    lp.lower[l3 + i] = -kInf;
    lp.column_labels[l3 + i] = "l3_" + std::to_string(i);
  }
  for (int i = 0; i < n; ++i) {
    lp.column_labels[l4 + i] = "l4_" + std::to_string(i);
    lp.column_labels[l5 + i] = "l5_" + std::to_string(i);
  }
  for (int k = 0; k < K; ++k) {
    lp.c[l6 + k] = -1.0;
    lp.lower[l6 + k] = -kInf;
    lp.upper[l6 + k] = 0.0;
    lp.column_labels[l6 + k] = "l6_" + std::to_string(k);
  }
  for (int i = 0; i < n; ++i) {
    lp.c[l7 + i] = -1.0;
    lp.lower[l7 + i] = -kInf;
    lp.upper[l7 + i] = 0.0;
    lp.column_labels[l7 + i] = "l7_" + std::to_string(i);
  }

  const Vector beta_entry = instance.expanded_beta();
  int row = 0;
  // (e)  lambda6_k + sum_{i in k} lambda4_i + s = alpha_k
  for (int k = 0; k < K; ++k, ++row) {
    lp.Aeq(row, l6 + k) = 1.0;
    const int begin = instance.partition.begin_of(k);
    for (int i = begin; i < begin + instance.partition.size_of(k); ++i) {
      lp.Aeq(row, l4 + i) = 1.0;
    }
    lp.beq[row] = instance.alpha[k];
  }
  // (f)  lambda7_i + lambda5_i + s = beta_i
  for (int i = 0; i < n; ++i, ++row) {
    lp.Aeq(row, l7 + i) = 1.0;
    lp.Aeq(row, l5 + i) = 1.0;
    lp.beq[row] = beta_entry[i];
  }
  // (g)  A^T lambda3 - (1/M)(lambda4 + lambda5) + s = 0   (upper side)
  //     -A^T lambda3 - (1/M)(lambda4 + lambda5) + s = 0   (lower side)
  for (int side = 0; side < 2; ++side) {
    const double sign = side == 0 ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i, ++row) {
      for (int j = 0; j < m; ++j) lp.Aeq(row, l3 + j) = sign * instance.A(j, i);
      lp.Aeq(row, l4 + i) = -inv_m;
      lp.Aeq(row, l5 + i) = -inv_m;
    }
  }
  for (int r = 0; r < rows; ++r) {
    lp.Aeq(r, base + r) = 1.0;
    lp.column_labels[base + r] = "slack_" + std::to_string(r);
  }
  return lp;
}

DualSolution extract_dual_solution(const ProblemInstance& instance,
                                   const LpSolution& solution) {
  const int m = instance.rows();
  const int n = instance.cols();
  const int K = instance.partition.num_blocks();
  DualSolution dual;
  dual.lambda3 = solution.x.segment(0, m);
  dual.lambda4 = solution.x.segment(m, n);
  dual.lambda5 = solution.x.segment(m + n, n);
  dual.lambda6 = solution.x.segment(m + 2 * n, K);
  dual.lambda7 = solution.x.segment(m + 2 * n + K, n);
  dual.objective = instance.b.dot(dual.lambda3) + dual.lambda6.sum() +
                   dual.lambda7.sum();
  return dual;
}

RelaxationSolution recover_solution(const BidualEncoding& encoding,
                                    const LpSolution& solution) {
  RelaxationSolution out;
  switch (solution.status) {
    case LpStatus::Optimal:
      out.status = SolveStatus::Optimal;
      break;
    case LpStatus::Infeasible:
      out.status = SolveStatus::Infeasible;
      return out;
    case LpStatus::Unbounded:
      out.status = SolveStatus::Unbounded;
      return out;
    default:
      throw std::runtime_error(std::string("bidual LP solve failed: ") +
                               to_string(solution.status));
  }
  const int n = static_cast<int>(encoding.x_plus.size());
  const int K = encoding.partition.num_blocks();
  out.x.resize(n);
  for (int i = 0; i < n; ++i) {
    out.x[i] = solution.x[encoding.x_plus[i]] - solution.x[encoding.x_minus[i]];
  }
  out.block_inf_norms = Vector::Zero(K);
  out.block_l1_norms = Vector::Zero(K);
  double objective = 0.0;
  for (int k = 0; k < K; ++k) {
    const int begin = encoding.partition.begin_of(k);
    const auto seg = out.x.segment(begin, encoding.partition.size_of(k));
    out.block_inf_norms[k] = seg.cwiseAbs().maxCoeff();
    out.block_l1_norms[k] = seg.cwiseAbs().sum();
    objective += encoding.alpha[k] * out.block_inf_norms[k] +
                 encoding.beta[k] * out.block_l1_norms[k];
  }
  out.objective = encoding.scale * objective;
  return out;
}

RelaxationSolution solve_bidual(const ProblemInstance& instance,
                                const SolverOptions& opts) {
  require_valid(instance);
  // Row-wise necessary condition |b_r| <= M ||A_r||_1 for the boxed form
  // (and A_r = 0 forcing b_r = 0 in general): certify infeasibility without
  // sending a hopeless LP to the solver.
  const double M = instance.box.is_finite() ? instance.box.value() : kInf;
  for (int r = 0; r < instance.rows(); ++r) {
    const double reach = instance.A.row(r).cwiseAbs().sum();
    const double limit = reach == 0.0 ? 0.0 : M * reach;
    if (std::abs(instance.b[r]) > limit * (1.0 + 1e-12) + kFeasTol) {
      RelaxationSolution out;
      out.status = SolveStatus::Infeasible;
      return out;
    }
  }
  const BidualEncoding enc = build_bidual_lp(instance);
  return recover_solution(enc, solve_lp(enc.lp, opts));
}

}  // namespace bidual
