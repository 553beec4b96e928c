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

#ifndef BIDUAL_ORACLE_HPP
#define BIDUAL_ORACLE_HPP

#include <cstdint>
#include <limits>

#include "bidual/problem.hpp"

namespace bidual {

// Enumeration caps. Exceeding any of them makes the oracle return its best
// result so far with exhaustive = false instead of throwing.
struct OracleBudget {
  int max_entries = 20;                    // cap on n for entry enumeration
  int max_blocks = 12;                     // cap on K for block enumeration
  std::int64_t max_subsets = std::int64_t{1} << 22;  // total feasibility tests
  double time_budget_seconds = std::numeric_limits<double>::infinity();
};

// Exact solvers by support enumeration, cardinality-major and lexicographic
// within each cardinality, so outputs are deterministic. Feasibility of a
// support is least-squares residual against feas_tol * (1 + ||b||_inf); a
// finite box falls back to a simplex feasibility phase on the support.
//
// When the instance is infeasible outright (no support works), the returned
// value is +infinity with an empty support.

// min ||x||_0 s.t. A x = b (and the box, when finite). Requires
// n <= budget.max_entries.
OracleResult oracle_entry(const ProblemInstance& instance,
                          const OracleBudget& budget = {});

// min #active blocks s.t. A x = b (and the box). Requires
// K <= budget.max_blocks.
OracleResult oracle_group(const ProblemInstance& instance,
                          const OracleBudget& budget = {});

// min #active x-blocks + gamma ||e||_0 over A x + e = b, where the instance's
// last block is the identity error block. Ties prefer fewer active blocks,
// then fewer error entries. Requires K-1 <= max_blocks and m <= max_entries.
OracleResult oracle_mixed(const ProblemInstance& instance, double gamma,
                          const OracleBudget& budget = {});

// min sum_k [alpha_k 1(block k active) + beta_k #active entries in k] under
// the instance weights; subsumes the three presets. Enumerates all entry
// subsets (objective order need not match cardinality order), pruning
// supersets that cannot improve. Requires n <= budget.max_entries.
OracleResult weighted_oracle(const ProblemInstance& instance,
                             const OracleBudget& budget = {});

}  // namespace bidual

#endif  // BIDUAL_ORACLE_HPP
