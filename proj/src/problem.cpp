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

#include "bidual/problem.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bidual {

BoxBound BoxBound::finite(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw std::invalid_argument("BoxBound: M must be positive and finite");
  }
  return BoxBound(std::optional<double>(m));
}

double BoxBound::value() const {
  if (!m_) {
    throw std::logic_error("BoxBound: conservative bound has no value");
  }
  return *m_;
}

const char* to_string(SparsityKind kind) {
  switch (kind) {
    case SparsityKind::EntryWise:
      return "entry";
    case SparsityKind::Group:
      return "group";
    case SparsityKind::Mixed:
      return "mixed";
    case SparsityKind::Weighted:
      return "weighted";
  }
  return "?";
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal:
      return "optimal";
    case SolveStatus::Infeasible:
      return "infeasible";
    case SolveStatus::Unbounded:
      return "unbounded";
  }
  return "?";
}

Vector ProblemInstance::expanded_beta() const {
  Vector out(partition.total_size());
  for (int i = 0; i < partition.total_size(); ++i) {
    out[i] = beta[partition.block_of(i)];
  }
  return out;
}

namespace {

bool last_block_is_identity(const Matrix& A, const BlockPartition& partition) {
  const int m = static_cast<int>(A.rows());
  const int K = partition.num_blocks();
  if (partition.size_of(K - 1) != m) return false;
  const int off = partition.begin_of(K - 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (A(i, off + j) != (i == j ? 1.0 : 0.0)) return false;
    }
  }
  return true;
}

}  // namespace

ProblemInstance make_instance(Matrix A, Vector b, BlockPartition partition,
                              SparsityMode mode, BoxBound box) {
  const int K = partition.num_blocks();
  Vector alpha(K), beta(K);
  switch (mode.kind) {
    case SparsityKind::EntryWise:
      alpha.setZero();
      beta.setOnes();
      break;
    case SparsityKind::Group:
      alpha.setOnes();
      beta.setZero();
      break;
    case SparsityKind::Mixed:
      if (mode.gamma < 0.0) {
        throw std::invalid_argument("mixed mode: gamma must be >= 0");
      }
      if (!last_block_is_identity(A, partition)) {
        throw std::invalid_argument(
            "mixed mode: last block must be the m x m identity error block");
      }
      alpha.setOnes();
      alpha[K - 1] = 0.0;
      beta.setZero();
      beta[K - 1] = mode.gamma;
      break;
    case SparsityKind::Weighted:
      throw std::invalid_argument(
          "weighted mode has no preset; set alpha and beta on the instance "
          "directly");
  }
  return ProblemInstance{std::move(A),     std::move(b), std::move(partition),
                         std::move(alpha), std::move(beta), box, mode};
}

ProblemInstance make_mixed_instance(const Matrix& A, Vector b,
                                    BlockPartition x_partition, double gamma,
                                    BoxBound box) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (x_partition.total_size() != n) {
    throw std::invalid_argument("make_mixed_instance: partition does not cover A");
  }
  Matrix full(m, n + m);
  full.leftCols(n) = A;
  full.rightCols(m) = Matrix::Identity(m, m);
  std::vector<int> sizes = x_partition.sizes();
  sizes.push_back(m);
  return make_instance(std::move(full), std::move(b), BlockPartition(sizes),
                       SparsityMode::mixed(gamma), box);
}

std::vector<std::string> validate(const ProblemInstance& instance) {
  std::vector<std::string> violations;
  const int n = instance.partition.total_size();
  const int K = instance.partition.num_blocks();
  if (instance.cols() != n) {
    std::ostringstream os;
    os << "dimension mismatch A vs partition: cols(A)=" << instance.cols()
       << ", partition total=" << n;
    violations.push_back(os.str());
  }
  if (instance.b.size() != instance.A.rows()) {
    violations.push_back("dimension mismatch b vs A");
  }
  if (instance.alpha.size() != K) {
    violations.push_back("alpha length must equal number of blocks");
  } else if ((instance.alpha.array() < 0.0).any()) {
    violations.push_back("alpha must be nonnegative");
  }
  if (instance.beta.size() != K) {
    violations.push_back("beta length must equal number of blocks");
  } else if ((instance.beta.array() < 0.0).any()) {
    violations.push_back("beta must be nonnegative");
  }
  if (!instance.A.allFinite()) violations.push_back("A contains non-finite entries");
  if (!instance.b.allFinite()) violations.push_back("b contains non-finite entries");
  return violations;
}

double auto_zero_tol(const Vector& x) {
  const double scale = x.size() > 0 ? x.cwiseAbs().maxCoeff() : 0.0;
  return 1e-6 * std::max(1.0, scale);
}

double primal_objective(const ProblemInstance& instance, const Vector& x,
                        double zero_tol) {
  if (x.size() != instance.partition.total_size()) {
    throw std::invalid_argument("primal_objective: x has wrong length");
  }
  const double tol = zero_tol < 0.0 ? auto_zero_tol(x) : zero_tol;
  double value = 0.0;
  for (int k = 0; k < instance.partition.num_blocks(); ++k) {
    const int begin = instance.partition.begin_of(k);
    const int size = instance.partition.size_of(k);
    int active = 0;
    for (int i = begin; i < begin + size; ++i) {
      if (std::abs(x[i]) > tol) ++active;
    }
    if (active > 0) value += instance.alpha[k];
    value += instance.beta[k] * active;
  }
  return value;
}

double SparsityCertificate::integer_bound() const {
  return std::ceil(bound - 1e-9);
}

}  // namespace bidual
