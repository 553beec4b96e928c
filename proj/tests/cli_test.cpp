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

#include "commands.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bidual::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / "bidual_cli_test";
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write_file(const std::string& name, const std::string& body) {
    const fs::path path = dir_ / name;
    std::ofstream out(path);
    out << body;
    return path.string();
  }

  fs::path dir_;
};

constexpr char kIdentityEntry[] = R"({
  "m": 2, "n": 2, "A": [[1, 0], [0, 1]], "b": [1, 0],
  "blocks": [1, 1], "M": 1, "mode": "entry"
})";

constexpr char kGroupWorked[] = R"({
  "m": 1, "n": 2, "A": [[1, 1]], "b": [1],
  "blocks": [2], "M": 1, "mode": "group"
})";

constexpr char kBoxInfeasible[] = R"({
  "m": 1, "n": 2, "A": [[1, 1]], "b": [10],
  "blocks": [1, 1], "M": 1, "mode": "entry"
})";

TEST_F(CliTest, SolveReportsOptimum) {
  ProblemOptions opts;
  opts.file = write_file("id.json", kIdentityEntry);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_solve(opts, out, err), kExitOk);
  EXPECT_NE(out.str().find("status: optimal"), std::string::npos);
  EXPECT_NE(out.str().find("objective: 1"), std::string::npos);
}

TEST_F(CliTest, SolveInfeasibleBoxExitsTwo) {
  ProblemOptions opts;
  opts.file = write_file("bad.json", kBoxInfeasible);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_solve(opts, out, err), kExitInfeasible);
  EXPECT_NE(out.str().find("status: infeasible"), std::string::npos);
}

TEST_F(CliTest, MissingFieldNamesItAndExitsOne) {
  ProblemOptions opts;
  opts.file = write_file("nob.json", R"({
    "m": 2, "n": 2, "A": [[1, 0], [0, 1]],
    "blocks": [1, 1], "M": 1, "mode": "entry"
  })");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_solve(opts, out, err), kExitInputError);
  EXPECT_NE(err.str().find("\"b\""), std::string::npos);
}

TEST_F(CliTest, MalformedJsonReportsLine) {
  ProblemOptions opts;
  opts.file = write_file("broken.json", "{\n  \"m\": 1,\n  oops\n}");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_solve(opts, out, err), kExitInputError);
  EXPECT_NE(err.str().find("line"), std::string::npos);
}

TEST_F(CliTest, MissingFileExitsOne) {
  ProblemOptions opts;
  opts.file = (dir_ / "nope.json").string();
  std::ostringstream out, err;
  EXPECT_EQ(cmd_solve(opts, out, err), kExitInputError);
}

TEST_F(CliTest, BoundPrintsCertificate) {
  ProblemOptions opts;
  opts.file = write_file("grp.json", kGroupWorked);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_bound(opts, out, err), kExitOk);
  EXPECT_NE(out.str().find("bound: 0.5"), std::string::npos);
  EXPECT_NE(out.str().find("integer bound: 1"), std::string::npos);
  EXPECT_NE(out.str().find("M_used: 1"), std::string::npos);
  EXPECT_NE(out.str().find("valid whenever"), std::string::npos);
}

TEST_F(CliTest, BoundNeedsFiniteBox) {
  ProblemOptions opts;
  opts.file = write_file("grp.json", kGroupWorked);
  opts.box_override = "conservative";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_bound(opts, out, err), kExitInputError);
  EXPECT_NE(err.str().find("finite box"), std::string::npos);
}

TEST_F(CliTest, BoundInfeasibleRelaxationExitsTwo) {
  ProblemOptions opts;
  opts.file = write_file("bad.json", kBoxInfeasible);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_bound(opts, out, err), kExitInfeasible);
  EXPECT_NE(err.str().find("infeasible"), std::string::npos);
}

TEST_F(CliTest, OracleFindsSharedColumn) {
  ProblemOptions opts;
  opts.file = write_file("shared.json", R"({
    "m": 2, "n": 3, "A": [[1, 0, 1], [0, 1, 1]], "b": [1, 1],
    "blocks": [1, 1, 1], "M": "conservative", "mode": "entry"
  })");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_oracle(opts, out, err), kExitOk);
  EXPECT_NE(out.str().find("value: 1"), std::string::npos);
  EXPECT_NE(out.str().find("support: [2]"), std::string::npos);
  EXPECT_NE(out.str().find("exhaustive: yes"), std::string::npos);
}

TEST_F(CliTest, OracleBudgetFlagIsHonored) {
  ProblemOptions opts;
  opts.file = write_file("id.json", kIdentityEntry);
  opts.budget_subsets = 1;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_oracle(opts, out, err), kExitInfeasible);
  EXPECT_NE(out.str().find("exhaustive: no"), std::string::npos);
}

TEST_F(CliTest, VerifyAcceptsTightCertificate) {
  ProblemOptions opts;
  opts.file = write_file("id.json", kIdentityEntry);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(opts, out, err), kExitOk);
  EXPECT_NE(out.str().find("valid: yes"), std::string::npos);
  EXPECT_NE(out.str().find("gap: 0"), std::string::npos);
}

TEST_F(CliTest, VerifyReportsLooseGroupGap) {
  ProblemOptions opts;
  opts.file = write_file("grp.json", kGroupWorked);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(opts, out, err), kExitOk);
  EXPECT_NE(out.str().find("bound: 0.5"), std::string::npos);
  EXPECT_NE(out.str().find("gap: 0.5"), std::string::npos);
  EXPECT_NE(out.str().find("valid: yes"), std::string::npos);
}

TEST_F(CliTest, ModeAndBoxOverridesApply) {
  ProblemOptions opts;
  opts.file = write_file("weights.json", R"({
    "m": 1, "n": 2, "A": [[1, 1]], "b": [2],
    "blocks": [1, 1], "alpha": [3, 3], "beta": [3, 3], "M": "conservative"
  })");
  opts.mode_override = "entry";
  opts.box_override = "2";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_bound(opts, out, err), kExitOk);
  EXPECT_NE(out.str().find("kind: entry"), std::string::npos);
  EXPECT_NE(out.str().find("bound: 1"), std::string::npos);

  opts.box_override = "not-a-number";
  std::ostringstream out2, err2;
  EXPECT_EQ(cmd_bound(opts, out2, err2), kExitInputError);
}

TEST_F(CliTest, GammaOverrideRequiresPreset) {
  ProblemOptions opts;
  opts.file = write_file("weights.json", R"({
    "m": 1, "n": 1, "A": [[1]], "b": [1],
    "blocks": [1], "alpha": [1], "beta": [1], "M": 1
  })");
  opts.gamma = 0.5;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_solve(opts, out, err), kExitInputError);
  EXPECT_NE(err.str().find("preset"), std::string::npos);
}

TEST_F(CliTest, SweepEmitsCsvAndSummary) {
  SweepOptions opts;
  opts.rows = 5;
  opts.cols = 8;
  opts.grid = {1, 3};
  opts.trials = 2;
  opts.seed = 7;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_sweep(opts, out, err), kExitOk);
  std::istringstream lines(out.str());
  std::string header;
  ASSERT_TRUE(std::getline(lines, header));
  EXPECT_EQ(header, "trial,sparsity,multiplier,bound,truth,ratio,status,ms");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 2 * 2 * 3);

  opts.summary = true;
  std::ostringstream summary_out, summary_err;
  EXPECT_EQ(cmd_sweep(opts, summary_out, summary_err), kExitOk);
  const auto doc = nlohmann::json::parse(summary_out.str());
  EXPECT_EQ(doc.at("cells").size(), 2u * 3u);
}

TEST_F(CliTest, SweepRejectsBadGrid) {
  SweepOptions opts;
  opts.cols = 8;
  opts.grid = {99};
  std::ostringstream out, err;
  EXPECT_EQ(cmd_sweep(opts, out, err), kExitInputError);
}

TEST_F(CliTest, ClassifyEmitsJsonReport) {
  ClassifyOptions opts;
  opts.trials = 3;
  opts.seed = 1;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_classify(opts, out, err), kExitOk);
  const auto doc = nlohmann::json::parse(out.str());
  EXPECT_EQ(doc.at("report").at("trials").get<int>(), 3);
  EXPECT_GE(doc.at("report").at("accuracy").get<double>(), 0.0);

  std::ostringstream out2, err2;
  EXPECT_EQ(cmd_classify(opts, out2, err2), kExitOk);
  EXPECT_EQ(out.str(), out2.str());
}

TEST_F(CliTest, LogLevelsGateDiagnostics) {
  ProblemOptions opts;
  opts.file = write_file("id.json", kIdentityEntry);

  std::ostringstream out, err;
  ASSERT_EQ(setenv("BIDUAL_LOG", "debug", 1), 0);
  EXPECT_EQ(cmd_solve(opts, out, err), kExitOk);
  EXPECT_NE(err.str().find("[info]"), std::string::npos);
  EXPECT_NE(err.str().find("[debug]"), std::string::npos);

  ASSERT_EQ(setenv("BIDUAL_LOG", "info", 1), 0);
  std::ostringstream out2, err2;
  EXPECT_EQ(cmd_solve(opts, out2, err2), kExitOk);
  EXPECT_NE(err2.str().find("[info]"), std::string::npos);
  EXPECT_EQ(err2.str().find("[debug]"), std::string::npos);

  ASSERT_EQ(unsetenv("BIDUAL_LOG"), 0);
  std::ostringstream out3, err3;
  EXPECT_EQ(cmd_solve(opts, out3, err3), kExitOk);
  EXPECT_EQ(err3.str().find("[info]"), std::string::npos);
}

}  // namespace
}  // namespace bidual::cli
