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

#ifndef BIDUAL_CERTIFY_HPP
#define BIDUAL_CERTIFY_HPP

#include <stdexcept>
#include <string>

#include "bidual/problem.hpp"

namespace bidual {

// Thrown by lower_bound when the relaxation has no feasible point. Since the
// relaxation only drops the counting objective, the exact problem is then
// infeasible as well, so this doubles as a certificate of infeasibility.
struct InfeasibleRelaxation : std::runtime_error {
  InfeasibleRelaxation()
      : std::runtime_error(
            "bidual relaxation is infeasible; the exact sparsity problem is "
            "infeasible as well") {}
};

// Outcome of checking a certificate against an exact oracle result. verify
// reports but never asserts: an unsatisfied hypothesis or a violated bound is
// flagged here and left to the caller.
struct VerificationReport {
  bool valid = false;                // bound <= oracle value + 1e-9
  bool hypothesis_satisfied = true;  // M_used covers the oracle witness
  bool oracle_exhaustive = true;     // copied from the oracle result
  double gap = 0.0;                  // oracle value - bound (>= 0 when valid)
  double witness_inf_norm = 0.0;
  std::string note;
};

// Solves the box bidual relaxation and packages its optimal value as a lower
// bound on the exact weighted sparsity optimum. The bound is conditional:
// it holds whenever M >= ||x*||_inf at some optimum x* of the exact problem.
// Requires a finite box (the conservative form carries no 1/M certificate).
SparsityCertificate lower_bound(const ProblemInstance& instance);

// Checks bound <= value + 1e-9 and whether the conditional-validity
// hypothesis M_used >= ||witness||_inf holds for the oracle's witness.
VerificationReport verify_certificate(const SparsityCertificate& cert,
                                      const OracleResult& oracle_result);

}  // namespace bidual

#endif  // BIDUAL_CERTIFY_HPP
