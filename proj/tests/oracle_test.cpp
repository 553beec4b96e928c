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

#include <gtest/gtest.h>

#include <cmath>

#include "bidual/random.hpp"
#include "support/test_instances.hpp"

namespace bidual {
namespace {

void expect_witness_feasible(const ProblemInstance& inst,
                             const OracleResult& result) {
  ASSERT_TRUE(std::isfinite(result.value));
  ASSERT_EQ(result.witness_x.size(), inst.cols());
  const double tol =
      kFeasTol * (1.0 + (inst.b.size() ? inst.b.cwiseAbs().maxCoeff() : 0.0));
  EXPECT_LE((inst.A * result.witness_x - inst.b).cwiseAbs().maxCoeff(), tol);
  if (inst.box.is_finite()) {
    EXPECT_LE(result.witness_x.cwiseAbs().maxCoeff(),
              inst.box.value() + kFeasTol);
  }
  for (int i = 0; i < inst.cols(); ++i) {
    const bool in_support = std::find(result.support.begin(),
                                      result.support.end(),
                                      i) != result.support.end();
    if (!in_support) EXPECT_EQ(result.witness_x[i], 0.0);
  }
}

TEST(OracleEntry, ZeroRhsNeedsNothing) {
  const auto inst =
      make_instance(Matrix::Identity(2, 2), Vector::Zero(2),
                    BlockPartition::singletons(2), SparsityMode::entry_wise(),
                    BoxBound::conservative());
  const OracleResult r = oracle_entry(inst);
  EXPECT_DOUBLE_EQ(r.value, 0.0);
  EXPECT_TRUE(r.support.empty());
  EXPECT_TRUE(r.exhaustive);
  EXPECT_DOUBLE_EQ(r.witness_x.cwiseAbs().maxCoeff(), 0.0);
}

TEST(OracleEntry, SharedColumnWins) {
  Matrix A(2, 3);
  A << 1, 0, 1, 0, 1, 1;
  const auto inst =
      make_instance(A, Vector::Ones(2), BlockPartition::singletons(3),
                    SparsityMode::entry_wise(), BoxBound::conservative());
  const OracleResult r = oracle_entry(inst);
  EXPECT_DOUBLE_EQ(r.value, 1.0);
  ASSERT_EQ(r.support, (std::vector<int>{2}));
  EXPECT_NEAR(r.witness_x[2], 1.0, 1e-10);
  expect_witness_feasible(inst, r);
}

TEST(OracleEntry, IdentityForcesBothEntries) {
  const auto inst =
      make_instance(Matrix::Identity(2, 2), Vector::Ones(2),
                    BlockPartition::singletons(2), SparsityMode::entry_wise(),
                    BoxBound::conservative());
  EXPECT_DOUBLE_EQ(oracle_entry(inst).value, 2.0);
}

TEST(OracleEntry, BoxRaisesTheOptimum) {
  Matrix A(1, 2);
  A << 1, 1;
  auto inst =
      make_instance(A, Vector::Constant(1, 2.0), BlockPartition::singletons(2),
                    SparsityMode::entry_wise(), BoxBound::conservative());
  EXPECT_DOUBLE_EQ(oracle_entry(inst).value, 1.0);  // x = [2, 0]
  inst.box = BoxBound::finite(1.5);
  const OracleResult boxed = oracle_entry(inst);
  EXPECT_DOUBLE_EQ(boxed.value, 2.0);  // no single entry reaches 2 inside the box
  expect_witness_feasible(inst, boxed);
}

TEST(OracleEntry, InfeasibleInstanceReportsInfinity) {
  Matrix A(1, 2);
  A << 1, 1;
  auto inst =
      make_instance(A, Vector::Constant(1, 10.0), BlockPartition::singletons(2),
                    SparsityMode::entry_wise(), BoxBound::finite(1.0));
  const OracleResult r = oracle_entry(inst);
  EXPECT_TRUE(std::isinf(r.value));
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(r.support.empty());
}

TEST(OracleEntry, PreconditionAndBudget) {
  const int n = 25;
  const auto inst = make_instance(Matrix::Ones(1, n), Vector::Ones(1),
                                  BlockPartition::singletons(n),
                                  SparsityMode::entry_wise(),
                                  BoxBound::conservative());
  EXPECT_THROW(oracle_entry(inst), std::invalid_argument);

  const auto small =
      make_instance(Matrix::Identity(3, 3), Vector::Ones(3),
                    BlockPartition::singletons(3), SparsityMode::entry_wise(),
                    BoxBound::conservative());
  OracleBudget tiny;
  tiny.max_subsets = 2;
  const OracleResult r = oracle_entry(small, tiny);
  EXPECT_FALSE(r.exhaustive);
}

TEST(OracleGroup, SingleBlockIsForced) {
  Matrix A(1, 2);
  A << 1, 1;
  const auto inst =
      make_instance(A, Vector::Ones(1), BlockPartition::single_block(2),
                    SparsityMode::group(), BoxBound::conservative());
  const OracleResult r = oracle_group(inst);
  EXPECT_DOUBLE_EQ(r.value, 1.0);
  EXPECT_EQ(r.support, (std::vector<int>{0, 1}));
}

TEST(OracleGroup, EitherIdentityBlockSuffices) {
  Matrix A(2, 4);
  A << 1, 0, 1, 0, 0, 1, 0, 1;
  Vector b(2);
  b << 1, 0;
  const auto inst = make_instance(A, b, BlockPartition({2, 2}),
                                  SparsityMode::group(),
                                  BoxBound::conservative());
  const OracleResult r = oracle_group(inst);
  EXPECT_DOUBLE_EQ(r.value, 1.0);
  EXPECT_EQ(r.support, (std::vector<int>{0, 1}));  // first block by order
  expect_witness_feasible(inst, r);
}

TEST(OracleGroup, ZeroRhs) {
  Matrix A(1, 2);
  A << 1, 1;
  const auto inst =
      make_instance(A, Vector::Zero(1), BlockPartition::single_block(2),
                    SparsityMode::group(), BoxBound::conservative());
  EXPECT_DOUBLE_EQ(oracle_group(inst).value, 0.0);
}

TEST(OracleMixed, TrivialErrorSolutionWinsAtSmallGamma) {
  Matrix A(2, 1);
  A << 1, 1;
  const auto inst = make_mixed_instance(A, Vector::Ones(2), BlockPartition({1}),
                                        0.01, BoxBound::conservative());
  const OracleResult r = oracle_mixed(inst, 0.01);
  EXPECT_NEAR(r.value, 0.02, 1e-12);
  EXPECT_EQ(r.support, (std::vector<int>{1, 2}));  // pure error support
  EXPECT_NEAR(r.witness_x[0], 0.0, 1e-12);
  EXPECT_NEAR(r.witness_x[1], 1.0, 1e-10);
  EXPECT_NEAR(r.witness_x[2], 1.0, 1e-10);
  expect_witness_feasible(inst, r);
}

TEST(OracleMixed, DictionaryWinsAtLargeGamma) {
  Matrix A(2, 1);
  A << 1, 1;
  const auto inst = make_mixed_instance(A, Vector::Ones(2), BlockPartition({1}),
                                        2.0, BoxBound::conservative());
  const OracleResult r = oracle_mixed(inst, 2.0);
  EXPECT_DOUBLE_EQ(r.value, 1.0);
  EXPECT_EQ(r.support, (std::vector<int>{0}));
  EXPECT_NEAR(r.witness_x[0], 1.0, 1e-10);
}

TEST(OracleMixed, ZeroRhsAndStructureChecks) {
  Matrix A(2, 1);
  A << 1, 1;
  const auto inst = make_mixed_instance(A, Vector::Zero(2), BlockPartition({1}),
                                        0.01, BoxBound::conservative());
  EXPECT_DOUBLE_EQ(oracle_mixed(inst, 0.01).value, 0.0);

  const auto not_mixed =
      make_instance(Matrix::Identity(2, 2), Vector::Ones(2),
                    BlockPartition::singletons(2), SparsityMode::entry_wise(),
                    BoxBound::conservative());
  EXPECT_THROW(oracle_mixed(not_mixed, 0.01), std::invalid_argument);
}

TEST(WeightedOracle, AllZeroWeightsCostNothing) {
  auto inst = make_instance(Matrix::Identity(2, 2), Vector::Ones(2),
                            BlockPartition::singletons(2),
                            SparsityMode::entry_wise(), BoxBound::conservative());
  inst.beta.setZero();
  const OracleResult r = weighted_oracle(inst);
  EXPECT_DOUBLE_EQ(r.value, 0.0);
  EXPECT_TRUE(r.exhaustive);
}

TEST(WeightedOracle, AgreesWithEntryOracle) {
  Rng rng(314);
  for (int it = 0; it < 100; ++it) {
    const auto gen = bidual_tests::planted_gaussian(rng, 3, 6,
                                                    rng.uniform_int(0, 3));
    const BoxBound box = rng.uniform() < 0.5
                             ? BoxBound::conservative()
                             : BoxBound::finite(rng.uniform(0.5, 2.0));
    const auto inst = make_instance(gen.A, gen.b, BlockPartition::singletons(6),
                                    SparsityMode::entry_wise(), box);
    const OracleResult specialized = oracle_entry(inst);
    const OracleResult general = weighted_oracle(inst);
    ASSERT_EQ(specialized.exhaustive, general.exhaustive);
    EXPECT_DOUBLE_EQ(specialized.value, general.value);
    EXPECT_EQ(specialized.support, general.support);
  }
}

TEST(WeightedOracle, AgreesWithGroupOracle) {
  Rng rng(2718);
  for (int it = 0; it < 100; ++it) {
    const auto gen = bidual_tests::planted_gaussian(rng, 3, 6,
                                                    rng.uniform_int(0, 3));
    const auto partition = bidual_tests::random_partition(rng, 6);
    const auto inst = make_instance(gen.A, gen.b, partition,
                                    SparsityMode::group(),
                                    BoxBound::conservative());
    EXPECT_DOUBLE_EQ(oracle_group(inst).value, weighted_oracle(inst).value);
  }
}

TEST(WeightedOracle, AgreesWithMixedOracle) {
  Rng rng(161803);
  for (int it = 0; it < 60; ++it) {
    const auto gen = bidual_tests::planted_gaussian(rng, 3, 4,
                                                    rng.uniform_int(0, 2));
    const double gamma = rng.uniform() < 0.5 ? 0.01 : 0.6;
    const auto inst = make_mixed_instance(gen.A, gen.b, BlockPartition({2, 2}),
                                          gamma, BoxBound::conservative());
    const OracleResult mixed = oracle_mixed(inst, gamma);
    const OracleResult general = weighted_oracle(inst);
    EXPECT_NEAR(mixed.value, general.value, 1e-12);
  }
}

TEST(Oracle, WitnessAndMinimalityOnRandomInstances) {
  Rng rng(97);
  for (int it = 0; it < 60; ++it) {
    const auto gen = bidual_tests::planted_gaussian(rng, 3, 6,
                                                    rng.uniform_int(0, 3));
    const auto inst = make_instance(gen.A, gen.b, BlockPartition::singletons(6),
                                    SparsityMode::entry_wise(),
                                    BoxBound::conservative());
    const OracleResult r = oracle_entry(inst);
    ASSERT_TRUE(r.exhaustive);
    ASSERT_LE(r.value, gen.support.size());
    expect_witness_feasible(inst, r);
    // Planted vector is itself feasible on its support, so the oracle's value
    // can never exceed the plant's sparsity; and no smaller support works.
    const int v = static_cast<int>(r.value);
    ASSERT_EQ(static_cast<double>(v), r.value);
    if (v > 0) {
      auto shrunk = inst;
      // Check a handful of random strict subsets of size v-1.
      for (int probe = 0; probe < 10; ++probe) {
        std::vector<int> subset;
        for (int i = 0; i < inst.cols(); ++i) {
          if (rng.uniform() < 0.5) subset.push_back(i);
        }
        if (static_cast<int>(subset.size()) >= v) continue;
        Matrix sub(inst.rows(), static_cast<int>(subset.size()));
        for (int k = 0; k < sub.cols(); ++k) sub.col(k) = inst.A.col(subset[k]);
        if (subset.empty()) {
          EXPECT_GT(inst.b.cwiseAbs().maxCoeff(), 1e-7);
          continue;
        }
        const Vector xs =
            sub.completeOrthogonalDecomposition().solve(inst.b);
        EXPECT_GT((sub * xs - inst.b).cwiseAbs().maxCoeff(), 1e-7);
      }
    }
  }
}

}  // namespace
}  // namespace bidual
