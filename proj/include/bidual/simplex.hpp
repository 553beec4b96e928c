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

#ifndef BIDUAL_SIMPLEX_HPP
#define BIDUAL_SIMPLEX_HPP

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bidual/problem.hpp"

namespace bidual {

// Shared numerical tolerances. Every module works at these; nothing
// recalibrates downstream.
inline constexpr double kFeasTol = 1e-8;    // absolute primal feasibility
inline constexpr double kPivotTol = 1e-10;  // smaller pivots are rejected

inline double gap_tol(double objective) {
  return 1e-7 * (1.0 + std::abs(objective));
}

// Standard-form LP with two-sided variable bounds:
//
//   minimize c.x  subject to  Aeq x = beq,  lower <= x <= upper
//
// lower may be -inf and upper +inf entrywise. Aeq may have zero rows.
// column_labels are opaque tags for diagnostics; empty or one per column.
struct LinearProgram {
  Vector c;
  Matrix Aeq;
  Vector beq;
  Vector lower;
  Vector upper;
  std::vector<std::string> column_labels;

  int num_cols() const { return static_cast<int>(c.size()); }
  int num_rows() const { return static_cast<int>(beq.size()); }
};

enum class LpStatus {
  Optimal,
  Infeasible,
  Unbounded,
  IterationLimit,      // best basis so far returned, flagged
  NumericalBreakdown,  // singular basis beyond repair
};

const char* to_string(LpStatus status);

enum class VarState : std::uint8_t { Basic, AtLower, AtUpper, FreeZero };

// Snapshot of a simplex basis: one basic column per row plus the rest state
// of every column. Columns >= num_cols() refer to phase-one artificials kept
// pinned at zero for redundant rows.
struct Basis {
  std::vector<int> basic;
  std::vector<VarState> state;
};

struct SolverOptions {
  double feas_tol = kFeasTol;
  double pivot_tol = kPivotTol;
  int max_iterations = 0;  // 0 selects 500 + 100 * (cols + rows)
  int refactor_interval = 50;
};

struct LpSolution {
  LpStatus status = LpStatus::NumericalBreakdown;
  Vector x;
  double objective = 0.0;
  Vector dual_y;          // equality-row multipliers, c_B^T B^{-1}
  Vector reduced_costs;   // c - Aeq^T dual_y
  int iterations = 0;
  Basis basis;
};

struct PhaseOneResult {
  LpStatus status = LpStatus::NumericalBreakdown;  // Optimal = feasible basis
  Basis basis;
  Vector x;
  double infeasibility = 0.0;  // artificial objective at termination
};

// Two-phase bounded-variable revised simplex. Deterministic: Dantzig pricing
// with lowest-index tie-breaks, Bland's rule after 3N degenerate pivots.
LpSolution solve_lp(const LinearProgram& lp, const SolverOptions& opts = {});

// Warm-started solve from a previously returned basis; skips phase one.
LpSolution solve_lp(const LinearProgram& lp, const SolverOptions& opts,
                    const Basis& warm_start);

// Feasibility phase only: a basic feasible point, or proof of infeasibility
// via a positive artificial objective.
PhaseOneResult phase_one(const LinearProgram& lp, const SolverOptions& opts = {});

// Largest complementary-slackness violation of a claimed-optimal solution:
// max_j |reduced_cost_j| * (distance of x_j from the bound the sign points to).
double complementarity_residual(const LinearProgram& lp, const LpSolution& sol,
                                double dual_tol = kFeasTol);

// Dual objective reconstructed from the equality multipliers and the bound
// terms of nonbasic columns; equals the primal objective at an optimum.
double dual_objective(const LinearProgram& lp, const LpSolution& sol,
                      double dual_tol = kFeasTol);

// Plain-text fixed-width dump for bug reports: "LP N R" header, the cost row,
// R rows of [Aeq | beq], then the lower and upper bound rows.
void dump_lp(const LinearProgram& lp, std::ostream& os);

}  // namespace bidual

#endif  // BIDUAL_SIMPLEX_HPP
