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

#ifndef BIDUAL_PROBLEM_HPP
#define BIDUAL_PROBLEM_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "bidual/block_partition.hpp"

namespace bidual {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// ell_inf box bound on the decision vector. "Conservative" means the box is
// dropped entirely from the formulation (not approximated by a huge number).
class BoxBound {
 public:
  static BoxBound conservative() { return BoxBound(std::nullopt); }
  static BoxBound finite(double m);

  bool is_finite() const { return m_.has_value(); }
  // Only valid when is_finite().
  double value() const;

 private:
  explicit BoxBound(std::optional<double> m) : m_(m) {}
  std::optional<double> m_;
};

enum class SparsityKind { EntryWise, Group, Mixed, Weighted };

// Weight preset selector. EntryWise counts nonzero entries (alpha=0, beta=1),
// Group counts nonzero blocks (alpha=1, beta=0), Mixed counts nonzero blocks
// of x plus gamma times nonzero entries of the trailing error block e.
// Weighted marks free-form per-block weights set directly on the instance.
struct SparsityMode {
  SparsityKind kind = SparsityKind::EntryWise;
  double gamma = 0.0;

  static SparsityMode entry_wise() { return {SparsityKind::EntryWise, 0.0}; }
  static SparsityMode group() { return {SparsityKind::Group, 0.0}; }
  static SparsityMode mixed(double gamma) { return {SparsityKind::Mixed, gamma}; }
  static SparsityMode weighted() { return {SparsityKind::Weighted, 0.0}; }
};

const char* to_string(SparsityKind kind);

// Weighted sparsity minimization instance:
//
//   minimize sum_k [ alpha_k * 1(x_k != 0) + beta_k * nnz(x_k) ]
//   subject to A x = b  (and ||x||_inf <= M when box is finite)
//
// alpha and beta are per-block weights; beta is expanded per-entry where a
// formulation needs it.
struct ProblemInstance {
  Matrix A;
  Vector b;
  BlockPartition partition;
  Vector alpha;
  Vector beta;
  BoxBound box = BoxBound::conservative();
  // Declared preset, informational only; the weights above are authoritative.
  SparsityMode mode = SparsityMode::weighted();

  int rows() const { return static_cast<int>(A.rows()); }
  int cols() const { return static_cast<int>(A.cols()); }
  // beta_k repeated d_k times, length n.
  Vector expanded_beta() const;
};

// Builds an instance with one of the standard weight presets. Mixed mode
// requires the partition's last block to have size m and the matching columns
// of A to be the m x m identity (the error block).
ProblemInstance make_instance(Matrix A, Vector b, BlockPartition partition,
                              SparsityMode mode, BoxBound box);

// Appends the m x m identity error block to A and extends the partition, then
// builds a Mixed-mode instance for A x + e = b.
ProblemInstance make_mixed_instance(const Matrix& A, Vector b,
                                    BlockPartition x_partition, double gamma,
                                    BoxBound box);

// Diagnostic invariant check; returns one message per violated invariant.
std::vector<std::string> validate(const ProblemInstance& instance);

// Support-detection threshold: 1e-6 * max(1, ||x||_inf).
double auto_zero_tol(const Vector& x);

// Exact weighted sparsity objective of x under the instance weights, counting
// entries with |x_i| > zero_tol as nonzero. zero_tol < 0 selects
// auto_zero_tol(x).
double primal_objective(const ProblemInstance& instance, const Vector& x,
                        double zero_tol = -1.0);

enum class SolveStatus { Optimal, Infeasible, Unbounded };

const char* to_string(SolveStatus status);

// Recovered solution of a bidual relaxation in model space.
struct RelaxationSolution {
  SolveStatus status = SolveStatus::Infeasible;
  Vector x;
  // (1/M) sum_k [alpha_k ||x_k||_inf + beta_k ||x_k||_1] for the box form,
  // the unscaled sum for the conservative form.
  double objective = 0.0;
  Vector block_inf_norms;
  Vector block_l1_norms;
};

// Multipliers of the dual linear program, kept in the sign convention of the
// maximization form: lambda3 free, lambda4 >= 0, lambda5 >= 0, lambda6 <= 0,
// lambda7 <= 0.
struct DualSolution {
  Vector lambda3;  // length m, equality rows
  Vector lambda4;  // length n, group-indicator coupling rows
  Vector lambda5;  // length n, entry-indicator coupling rows
  Vector lambda6;  // length K, encodes min{0, alpha - Pi^T lambda4}
  Vector lambda7;  // length n, encodes min{0, beta - lambda5}
  double objective = 0.0;  // b.lambda3 + 1.lambda6 + 1.lambda7
};

// Machine-checkable lower bound on the exact weighted sparsity optimum.
// Valid whenever M_used >= ||x*||_inf for an optimal x* of the exact problem.
struct SparsityCertificate {
  double bound = 0.0;
  SparsityMode kind;
  double M_used = 0.0;
  double relaxation_objective = 0.0;
  std::string claim;

  // ceil(bound - 1e-9); meaningful when the exact objective is integral
  // (entry-wise and group presets).
  double integer_bound() const;
};

// Result of an exact support-enumeration solve.
struct OracleResult {
  double value = 0.0;
  std::vector<int> support;  // active entry indices, sorted
  Vector witness_x;
  bool exhaustive = false;
};

}  // namespace bidual

#endif  // BIDUAL_PROBLEM_HPP
