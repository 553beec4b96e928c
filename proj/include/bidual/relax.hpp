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

#ifndef BIDUAL_RELAX_HPP
#define BIDUAL_RELAX_HPP

#include <stdexcept>
#include <vector>

#include "bidual/problem.hpp"
#include "bidual/simplex.hpp"

namespace bidual {

// LP encoding of the bidual relaxation
//
//   minimize scale * [ sum_k alpha_k t_k + sum_i beta_blk(i) (x+_i + x-_i) ]
//   s.t.  A (x+ - x-) = b
//         x+_i + x-_i <= t_k      for every i in block k, when alpha_k > 0
//         x+_i + x-_i <= M        (box form only)
//         x+, x-, t >= 0
//
// with scale = 1/M for the box form and 1 for the conservative form.
// Inequalities are carried as equality rows with slack columns.
struct BidualEncoding {
  LinearProgram lp;
  BlockPartition partition;
  Vector alpha;
  Vector beta;  // per block
  double scale = 1.0;
  std::vector<int> x_plus;   // column of x+_i, length n
  std::vector<int> x_minus;  // column of x-_i, length n
  std::vector<int> t_col;    // column of t_k, -1 for blocks with alpha_k == 0
};

struct ConservativeMNotSupported : std::logic_error {
  ConservativeMNotSupported()
      : std::logic_error(
            "dual LP requires a finite box bound M; the conservative form has "
            "no dual formulation here") {}
};

BidualEncoding build_bidual_lp(const ProblemInstance& instance);

// Dual of the boxed formulation, encoded as the negated minimization over
// (lambda3 free, lambda4 >= 0, lambda5 >= 0, lambda6 <= 0, lambda7 <= 0):
//
//   maximize b.lambda3 + 1.lambda6 + 1.lambda7
//   s.t. lambda6_k <= alpha_k - sum_{i in k} lambda4_i
//        lambda7_i <= beta_i - lambda5_i
//        -(1/M)(lambda4 + lambda5) <= A^T lambda3 <= (1/M)(lambda4 + lambda5)
//
// Throws ConservativeMNotSupported when the instance has no finite M.
LinearProgram build_dual_lp(const ProblemInstance& instance);

// Reads the multipliers back out of a solved dual LP; objective is reported
// in the maximization convention (the negation of the LP minimum).
DualSolution extract_dual_solution(const ProblemInstance& instance,
                                   const LpSolution& solution);

// Maps a solved bidual LP back to model space: x = x+ - x-, block norms, and
// the objective recomputed from x (equal to the LP optimum at an optimum).
RelaxationSolution recover_solution(const BidualEncoding& encoding,
                                    const LpSolution& solution);

// build + solve + recover, with a cheap per-row infeasibility guard for
// undersized boxes.
RelaxationSolution solve_bidual(const ProblemInstance& instance,
                                const SolverOptions& opts = {});

}  // namespace bidual

#endif  // BIDUAL_RELAX_HPP
