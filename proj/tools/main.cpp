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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using bidual::cli::ClassifyOptions;
using bidual::cli::ProblemOptions;
using bidual::cli::SweepOptions;

void add_problem_flags(CLI::App* cmd, ProblemOptions* opts,
                       bool with_budget) {
  cmd->add_option("--file", opts->file, "problem JSON file")->required();
  cmd->add_option("--m", opts->box_override,
                  "box bound override: positive number or \"conservative\"");
  cmd->add_option("--mode", opts->mode_override,
                  "weight preset override: entry | group | mixed");
  cmd->add_option("--gamma", opts->gamma, "error-block weight (mixed mode)");
  if (with_budget) {
    cmd->add_option("--budget-subsets", opts->budget_subsets,
                    "cap on oracle feasibility tests");
  }
}

// Runs a command, honoring --out: reports go to the file when given,
// otherwise to stdout. Diagnostics always go to stderr.
template <typename Fn>
int with_output(const std::string& out_path, Fn&& command) {
  if (out_path.empty()) return command(std::cout);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open output file: " << out_path << '\n';
    return bidual::cli::kExitInputError;
  }
  return command(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lagrangian bidual relaxations and lower-bound certificates "
               "for sparsity minimization"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write the report here instead of stdout");

  ProblemOptions solve_opts, bound_opts, oracle_opts, verify_opts;
  SweepOptions sweep_opts;
  ClassifyOptions classify_opts;

  CLI::App* solve = app.add_subcommand("solve", "solve the bidual relaxation");
  add_problem_flags(solve, &solve_opts, false);
  CLI::App* bound =
      app.add_subcommand("bound", "compute a sparsity lower-bound certificate");
  add_problem_flags(bound, &bound_opts, false);
  CLI::App* oracle =
      app.add_subcommand("oracle", "exact optimum by support enumeration");
  add_problem_flags(oracle, &oracle_opts, true);
  CLI::App* verify =
      app.add_subcommand("verify", "check the certificate against the oracle");
  add_problem_flags(verify, &verify_opts, true);

  CLI::App* sweep =
      app.add_subcommand("sweep", "bound sweep over planted sparsity levels");
  sweep->add_option("--rows", sweep_opts.rows, "measurement rows m");
  sweep->add_option("--cols", sweep_opts.cols, "dictionary columns n");
  sweep->add_option("--grid", sweep_opts.grid, "planted sparsity levels");
  sweep->add_option("--multipliers", sweep_opts.multipliers,
                    "box multiples of M0");
  sweep->add_option("--trials", sweep_opts.trials, "trials per level");
  sweep->add_option("--seed", sweep_opts.seed, "RNG seed");
  sweep->add_option("--threads", sweep_opts.threads, "worker threads");
  sweep->add_flag("--summary", sweep_opts.summary,
                  "emit the JSON quantile summary instead of CSV");

  CLI::App* classify =
      app.add_subcommand("classify", "synthetic mixed-sparsity classification");
  classify->add_option("--classes", classify_opts.classes, "class count K");
  classify->add_option("--class-columns", classify_opts.class_columns,
                       "columns per class block");
  classify->add_option("--rows", classify_opts.rows, "measurement rows m");
  classify->add_option("--rho", classify_opts.rho, "corrupted fraction of b");
  classify->add_option("--gamma", classify_opts.gamma, "error-block weight");
  classify->add_option("--trials", classify_opts.trials, "query count");
  classify->add_option("--seed", classify_opts.seed, "RNG seed");
  classify->add_option("--energy-threshold", classify_opts.energy_threshold,
                       "minimum block energy to enter classification");
  classify->add_option("--dictionary-scale", classify_opts.dictionary_scale,
                       "scale factor on dictionary entries");
  classify->add_option("--threads", classify_opts.threads, "worker threads");

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) {
    return with_output(out_path, [&](std::ostream& out) {
      return bidual::cli::cmd_solve(solve_opts, out, std::cerr);
    });
  }
  if (bound->parsed()) {
    return with_output(out_path, [&](std::ostream& out) {
      return bidual::cli::cmd_bound(bound_opts, out, std::cerr);
    });
  }
  if (oracle->parsed()) {
    return with_output(out_path, [&](std::ostream& out) {
      return bidual::cli::cmd_oracle(oracle_opts, out, std::cerr);
    });
  }
  if (verify->parsed()) {
    return with_output(out_path, [&](std::ostream& out) {
      return bidual::cli::cmd_verify(verify_opts, out, std::cerr);
    });
  }
  if (sweep->parsed()) {
    return with_output(out_path, [&](std::ostream& out) {
      return bidual::cli::cmd_sweep(sweep_opts, out, std::cerr);
    });
  }
  return with_output(out_path, [&](std::ostream& out) {
    return bidual::cli::cmd_classify(classify_opts, out, std::cerr);
  });
}
