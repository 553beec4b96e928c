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

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "bidual/bench.hpp"
#include "bidual/certify.hpp"
#include "bidual/oracle.hpp"
#include "bidual/problem_io.hpp"
#include "bidual/relax.hpp"

namespace bidual::cli {
namespace {

int log_level() {
  const char* env = std::getenv("BIDUAL_LOG");
  if (!env) return 0;
  const std::string value(env);
  if (value == "debug" || value == "trace") return 2;
  if (value == "info") return 1;
  return 0;
}

void log_info(std::ostream& err, const std::string& message) {
  if (log_level() >= 1) err << "[info] " << message << '\n';
}

void log_debug(std::ostream& err, const std::string& message) {
  if (log_level() >= 2) err << "[debug] " << message << '\n';
}

// All numeric report output carries 12 significant digits.
std::ostream& numeric(std::ostream& os) {
  os << std::setprecision(12);
  return os;
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

void print_vector(std::ostream& out, const std::string& name, const Vector& x) {
  int hidden = 0;
  for (int i = 0; i < x.size(); ++i) {
    if (std::abs(x[i]) < kDisplayTol) ++hidden;
  }
  out << name << " (" << (x.size() - hidden) << " of " << x.size()
      << " shown";
  if (hidden > 0) out << ", " << hidden << " below " << kDisplayTol;
  out << "):";
  if (hidden == 0) {
    out << " [";
    for (int i = 0; i < x.size(); ++i) {
      out << (i ? ", " : "") << x[i];
    }
    out << "]";
  } else {
    for (int i = 0; i < x.size(); ++i) {
      if (std::abs(x[i]) >= kDisplayTol) out << " [" << i << "]=" << x[i];
    }
  }
  out << '\n';
}

void print_support(std::ostream& out, const std::vector<int>& support) {
  out << "support: [";
  for (size_t i = 0; i < support.size(); ++i) {
    out << (i ? ", " : "") << support[i];
  }
  out << "]\n";
}

// Loads the problem file and applies the --m / --mode / --gamma overrides.
// Throws ParseError on any input problem.
ProblemInstance load_problem(const ProblemOptions& opts, std::ostream& err) {
  if (opts.file.empty()) throw ParseError("no problem file given (--file)");
  ProblemInstance inst = load_problem_file(opts.file);

  if (!opts.box_override.empty()) {
    if (opts.box_override == "conservative") {
      inst.box = BoxBound::conservative();
    } else {
      char* end = nullptr;
      const double m = std::strtod(opts.box_override.c_str(), &end);
      if (end == opts.box_override.c_str() || *end != '\0' || !(m > 0.0)) {
        throw ParseError("--m expects a positive number or \"conservative\"");
      }
      inst.box = BoxBound::finite(m);
    }
  }

  const bool gamma_override = opts.gamma >= 0.0;
  if (!opts.mode_override.empty() || gamma_override) {
    SparsityMode mode = inst.mode;
    if (!opts.mode_override.empty()) {
      if (opts.mode_override == "entry") {
        mode = SparsityMode::entry_wise();
      } else if (opts.mode_override == "group") {
        mode = SparsityMode::group();
      } else if (opts.mode_override == "mixed") {
        mode = SparsityMode::mixed(gamma_override ? opts.gamma : 0.01);
      } else {
        throw ParseError("--mode expects entry, group or mixed");
      }
    }
    if (mode.kind == SparsityKind::Mixed && gamma_override) {
      mode.gamma = opts.gamma;
    }
    if (mode.kind == SparsityKind::Weighted) {
      throw ParseError("--gamma requires a preset mode");
    }
    try {
      inst = make_instance(inst.A, inst.b, inst.partition, mode, inst.box);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }

  std::ostringstream os;
  os << "problem: m=" << inst.rows() << " n=" << inst.cols()
     << " blocks=" << inst.partition.num_blocks() << " mode="
     << to_string(inst.mode.kind) << " box="
     << (inst.box.is_finite() ? "finite" : "conservative");
  log_info(err, os.str());
  return inst;
}

OracleBudget budget_from(const ProblemOptions& opts) {
  OracleBudget budget;
  if (opts.budget_subsets > 0) budget.max_subsets = opts.budget_subsets;
  return budget;
}

OracleResult dispatch_oracle(const ProblemInstance& inst,
                             const OracleBudget& budget) {
  switch (inst.mode.kind) {
    case SparsityKind::EntryWise:
      return oracle_entry(inst, budget);
    case SparsityKind::Group:
      return oracle_group(inst, budget);
    case SparsityKind::Mixed:
      return oracle_mixed(inst, inst.mode.gamma, budget);
    case SparsityKind::Weighted:
      return weighted_oracle(inst, budget);
  }
  throw std::logic_error("unreachable");
}

void print_oracle(std::ostream& out, const OracleResult& result) {
  if (std::isinf(result.value)) {
    out << "value: inf (no feasible support)\n";
  } else {
    out << "value: " << result.value << '\n';
  }
  print_support(out, result.support);
  if (result.witness_x.size() > 0) print_vector(out, "witness", result.witness_x);
  out << "exhaustive: " << yes_no(result.exhaustive) << '\n';
}

int run_guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace

int cmd_solve(const ProblemOptions& opts, std::ostream& out,
              std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    const ProblemInstance inst = load_problem(opts, err);
    {
      const BidualEncoding enc = build_bidual_lp(inst);
      std::ostringstream os;
      os << "bidual LP: N=" << enc.lp.num_cols() << " R=" << enc.lp.num_rows();
      log_debug(err, os.str());
    }
    const RelaxationSolution sol = solve_bidual(inst);
    numeric(out) << "status: " << to_string(sol.status) << '\n';
    if (sol.status == SolveStatus::Infeasible) {
      err << "relaxation infeasible: the exact problem is infeasible as well\n";
      return kExitInfeasible;
    }
    if (sol.status == SolveStatus::Unbounded) return kExitUnbounded;
    out << "objective: " << sol.objective << '\n';
    print_vector(out, "x", sol.x);
    print_vector(out, "block sup norms", sol.block_inf_norms);
    print_vector(out, "block l1 norms", sol.block_l1_norms);
    return kExitOk;
  });
}

int cmd_bound(const ProblemOptions& opts, std::ostream& out,
              std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    const ProblemInstance inst = load_problem(opts, err);
    try {
      const SparsityCertificate cert = lower_bound(inst);
      numeric(out) << "kind: " << to_string(cert.kind.kind) << '\n'
                   << "bound: " << cert.bound << '\n'
                   << "integer bound: " << cert.integer_bound() << '\n'
                   << "M_used: " << cert.M_used << '\n'
                   << "claim: " << cert.claim << '\n';
      return kExitOk;
    } catch (const InfeasibleRelaxation& e) {
      err << e.what() << '\n';
      return kExitInfeasible;
    }
  });
}

int cmd_oracle(const ProblemOptions& opts, std::ostream& out,
               std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    const ProblemInstance inst = load_problem(opts, err);
    const OracleResult result = dispatch_oracle(inst, budget_from(opts));
    print_oracle(numeric(out), result);
    return std::isinf(result.value) ? kExitInfeasible : kExitOk;
  });
}

int cmd_verify(const ProblemOptions& opts, std::ostream& out,
               std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    const ProblemInstance inst = load_problem(opts, err);
    SparsityCertificate cert;
    try {
      cert = lower_bound(inst);
    } catch (const InfeasibleRelaxation& e) {
      err << e.what() << '\n';
      return kExitInfeasible;
    }
    const OracleResult oracle = dispatch_oracle(inst, budget_from(opts));
    const VerificationReport report = verify_certificate(cert, oracle);
    numeric(out) << "bound: " << cert.bound << '\n';
    if (std::isinf(oracle.value)) {
      out << "oracle value: inf (no feasible support)\n";
    } else {
      out << "oracle value: " << oracle.value << '\n';
    }
    out << "gap: " << report.gap << '\n'
        << "witness sup norm: " << report.witness_inf_norm << '\n'
        << "hypothesis satisfied: " << yes_no(report.hypothesis_satisfied)
        << '\n'
        << "oracle exhaustive: " << yes_no(report.oracle_exhaustive) << '\n'
        << "valid: " << yes_no(report.valid) << '\n'
        << "note: " << report.note << '\n';
    const bool hard_failure = !report.valid && report.hypothesis_satisfied;
    return hard_failure ? kExitInfeasible : kExitOk;
  });
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    SweepConfig config;
    config.m = opts.rows;
    config.n = opts.cols;
    config.sparsity_grid = opts.grid;
    config.M_multipliers = opts.multipliers;
    config.trials = opts.trials;
    config.rng_seed = opts.seed;
    config.threads = opts.threads;
    {
      std::ostringstream os;
      os << "sweep: m=" << config.m << " n=" << config.n << " levels="
         << config.sparsity_grid.size() << " trials=" << config.trials;
      log_info(err, os.str());
    }
    const auto records = run_sweep(config);
    if (opts.summary) {
      out << sweep_summary_json(config, records) << '\n';
    } else {
      out << sweep_to_csv(records);
    }
    return kExitOk;
  });
}

int cmd_classify(const ClassifyOptions& opts, std::ostream& out,
                 std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    ClassifyConfig config;
    config.num_classes = opts.classes;
    config.class_columns = opts.class_columns;
    config.m = opts.rows;
    config.corruption = opts.rho;
    config.gamma = opts.gamma;
    config.trials = opts.trials;
    config.rng_seed = opts.seed;
    config.block_energy_threshold = opts.energy_threshold;
    config.dictionary_scale = opts.dictionary_scale;
    config.threads = opts.threads;
    {
      std::ostringstream os;
      os << "classify: K=" << config.num_classes << " d=" << config.class_columns
         << " m=" << config.m << " trials=" << config.trials;
      log_info(err, os.str());
    }
    const ClassificationReport report = run_classify(config);
    out << classify_report_json(config, report) << '\n';
    return kExitOk;
  });
}

}  // namespace bidual::cli
