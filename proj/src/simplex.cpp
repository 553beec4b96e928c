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

#include "bidual/simplex.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace bidual {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_lp(const LinearProgram& lp) {
  const int n = lp.num_cols();
  const int r = lp.num_rows();
  if (lp.lower.size() != n || lp.upper.size() != n) {
    throw std::invalid_argument("LinearProgram: bound vectors must match c");
  }
  if (r > 0 && (lp.Aeq.rows() != r || lp.Aeq.cols() != n)) {
    throw std::invalid_argument("LinearProgram: Aeq dimensions inconsistent");
  }
  for (int j = 0; j < n; ++j) {
    if (std::isnan(lp.c[j]) || std::isnan(lp.lower[j]) || std::isnan(lp.upper[j])) {
      throw std::invalid_argument("LinearProgram: NaN entry");
    }
    if (lp.lower[j] > lp.upper[j]) {
      throw std::invalid_argument("LinearProgram: lower > upper");
    }
  }
  if (r > 0 && (!lp.Aeq.allFinite() || !lp.beq.allFinite())) {
    throw std::invalid_argument("LinearProgram: non-finite constraint data");
  }
}

// Bounded-variable revised simplex over the structural columns of an LP plus
// one artificial column per row. Artificial columns never re-enter the basis;
// after phase one their bounds collapse to [0, 0].
class Engine {
 public:
  Engine(const LinearProgram& lp, const SolverOptions& opts)
      : lp_(lp), opts_(opts), n_(lp.num_cols()), r_(lp.num_rows()), total_(n_ + r_) {
    max_iterations_ = opts_.max_iterations > 0 ? opts_.max_iterations
                                               : 500 + 100 * (n_ + r_);
    lo_.resize(total_);
    up_.resize(total_);
    for (int j = 0; j < n_; ++j) {
      lo_[j] = lp_.lower[j];
      up_[j] = lp_.upper[j];
    }
    for (int j = n_; j < total_; ++j) {
      lo_[j] = 0.0;
      up_[j] = kInf;
    }
    value_ = Vector::Zero(total_);
    state_.assign(total_, VarState::AtLower);
    art_sign_ = Vector::Ones(r_);
    basic_.resize(r_);
    binv_.resize(r_, r_);
  }

  void init_cold() {
    for (int j = 0; j < n_; ++j) {
      if (std::isfinite(lo_[j])) {
        state_[j] = VarState::AtLower;
        value_[j] = lo_[j];
      } else if (std::isfinite(up_[j])) {
        state_[j] = VarState::AtUpper;
        value_[j] = up_[j];
      } else {
        state_[j] = VarState::FreeZero;
        value_[j] = 0.0;
      }
    }
    Vector residual = r_ > 0 ? Vector(lp_.beq) : Vector();
    for (int j = 0; j < n_ && r_ > 0; ++j) {
      if (value_[j] != 0.0) residual -= lp_.Aeq.col(j) * value_[j];
    }
    binv_.setZero();
    for (int i = 0; i < r_; ++i) {
      art_sign_[i] = residual[i] >= 0.0 ? 1.0 : -1.0;
      basic_[i] = n_ + i;
      state_[n_ + i] = VarState::Basic;
      value_[n_ + i] = std::abs(residual[i]);
      binv_(i, i) = art_sign_[i];
    }
  }

  // Returns false when the warm basis cannot be restored (singular or
  // primal-infeasible); callers fall back to a cold start.
  bool init_warm(const Basis& warm) {
    if (static_cast<int>(warm.basic.size()) != r_ ||
        static_cast<int>(warm.state.size()) != total_) {
      return false;
    }
    state_ = warm.state;
    basic_ = warm.basic;
    for (int i = 0; i < r_; ++i) {
      const int j = basic_[i];
      if (j < 0 || j >= total_ || state_[j] != VarState::Basic) return false;
      if (j >= n_) art_sign_[i] = 1.0;  // pinned artificial, column sign +1
    }
    pin_artificials();
    for (int j = 0; j < total_; ++j) {
      switch (state_[j]) {
        case VarState::Basic:
          break;
        case VarState::AtLower:
          if (!std::isfinite(lo_[j])) return false;
          value_[j] = lo_[j];
          break;
        case VarState::AtUpper:
          if (!std::isfinite(up_[j])) return false;
          value_[j] = up_[j];
          break;
        case VarState::FreeZero:
          value_[j] = 0.0;
          break;
      }
    }
    if (!refactorize()) return false;
    for (int i = 0; i < r_; ++i) {
      const int j = basic_[i];
      const double v = value_[j];
      if (v < lo_[j] - opts_.feas_tol || v > up_[j] + opts_.feas_tol) return false;
    }
    return true;
  }

  LpStatus run_phase_one() {
    const LpStatus st = iterate(/*phase1=*/true);
    if (st != LpStatus::Optimal) return st;
    if (artificial_objective() > phase_one_tol()) return LpStatus::Infeasible;
    drive_out_artificials();
    pin_artificials();
    return LpStatus::Optimal;
  }

  LpStatus run_phase_two() { return iterate(/*phase1=*/false); }

  double artificial_objective() const {
    double sum = 0.0;
    for (int j = n_; j < total_; ++j) sum += value_[j];
    return sum;
  }

  int iterations() const { return iterations_; }

  Vector structural_x() const { return value_.head(n_); }

  Basis snapshot() const { return Basis{basic_, state_}; }

  // Equality multipliers and reduced costs for the phase-two cost vector.
  void duals(Vector* y, Vector* d) const {
    Vector cb(r_);
    for (int i = 0; i < r_; ++i) {
      const int j = basic_[i];
      cb[i] = j < n_ ? lp_.c[j] : 0.0;
    }
    *y = binv_.transpose() * cb;
    if (r_ > 0) {
      *d = lp_.c - lp_.Aeq.transpose() * (*y);
    } else {
      *d = lp_.c;
    }
  }

  bool refactorize() {
    if (r_ == 0) {
      refresh_basic_values();
      pivots_since_refactor_ = 0;
      return true;
    }
    Matrix basis_mat(r_, r_);
    for (int i = 0; i < r_; ++i) {
      const int j = basic_[i];
      if (j < n_) {
        basis_mat.col(i) = lp_.Aeq.col(j);
      } else {
        basis_mat.col(i).setZero();
        basis_mat(j - n_, i) = art_sign_[j - n_];
      }
    }
    Eigen::FullPivLU<Matrix> lu(basis_mat);
    lu.setThreshold(opts_.pivot_tol);
    if (!lu.isInvertible()) return false;
    binv_ = lu.inverse();
    refresh_basic_values();
    pivots_since_refactor_ = 0;
    return true;
  }

 private:
  double phase_one_tol() const {
    const double scale = r_ > 0 ? lp_.beq.cwiseAbs().maxCoeff() : 0.0;
    return opts_.feas_tol * (1.0 + scale);
  }

  void pin_artificials() {
    for (int j = n_; j < total_; ++j) {
      up_[j] = 0.0;
      if (state_[j] != VarState::Basic) {
        state_[j] = VarState::AtLower;
        value_[j] = 0.0;
      }
    }
  }

  void refresh_basic_values() {
    if (r_ == 0) return;
    Vector rhs = lp_.beq;
    for (int j = 0; j < n_; ++j) {
      if (state_[j] != VarState::Basic && value_[j] != 0.0) {
        rhs -= lp_.Aeq.col(j) * value_[j];
      }
    }
    // Nonbasic artificials sit at zero, no contribution.
    Vector xb = binv_ * rhs;
    for (int i = 0; i < r_; ++i) value_[basic_[i]] = xb[i];
  }

  Vector basic_cost(bool phase1) const {
    Vector cb(r_);
    for (int i = 0; i < r_; ++i) {
      const int j = basic_[i];
      cb[i] = phase1 ? (j >= n_ ? 1.0 : 0.0) : (j < n_ ? lp_.c[j] : 0.0);
    }
    return cb;
  }

  // Entering column choice. Returns -1 when dual-feasible.
  int choose_entering(const Vector& d, double dual_tol) const {
    int best = -1;
    double best_viol = dual_tol;
    for (int j = 0; j < n_; ++j) {
      if (state_[j] == VarState::Basic) continue;
      if (lo_[j] == up_[j]) continue;  // fixed column never moves
      double viol = 0.0;
      switch (state_[j]) {
        case VarState::AtLower:
          viol = -d[j];
          break;
        case VarState::AtUpper:
          viol = d[j];
          break;
        case VarState::FreeZero:
          viol = std::abs(d[j]);
          break;
        case VarState::Basic:
          break;
      }
      if (viol <= dual_tol) continue;
      if (bland_) return j;  // lowest index with any violation
      if (viol > best_viol) {
        best_viol = viol;
        best = j;
      }
    }
    return best;
  }

  LpStatus iterate(bool phase1) {
    bool fresh = false;
    const double dual_tol = opts_.feas_tol;
    degenerate_run_ = 0;
    bland_ = false;
    for (;;) {
      if (pivots_since_refactor_ >= opts_.refactor_interval) {
        if (!refactorize()) return LpStatus::NumericalBreakdown;
        fresh = true;
      }
      const Vector cb = basic_cost(phase1);
      const Vector y = binv_.transpose() * cb;
      Vector d(n_);
      if (r_ > 0) {
        d = (phase1 ? Vector(Vector::Zero(n_)) : Vector(lp_.c)) -
            lp_.Aeq.transpose() * y;
      } else {
        d = phase1 ? Vector(Vector::Zero(n_)) : Vector(lp_.c);
      }
      const int q = choose_entering(d, dual_tol);
      if (q < 0) {
        // Confirm on a fresh factorization before declaring optimality.
        if (!fresh) {
          if (!refactorize()) return LpStatus::NumericalBreakdown;
          fresh = true;
          continue;
        }
        return LpStatus::Optimal;
      }
      if (iterations_ >= max_iterations_) return LpStatus::IterationLimit;

      const double sigma =
          state_[q] == VarState::AtUpper ? -1.0
          : state_[q] == VarState::FreeZero ? (d[q] < 0.0 ? 1.0 : -1.0)
                                            : 1.0;
      Vector w;
      if (r_ > 0) {
        w = binv_ * lp_.Aeq.col(q);
      } else {
        w = Vector();
      }

      // Ratio test: entering variable's own span plus blocking basic columns.
      double t_limit = up_[q] - lo_[q];  // inf for any infinite side
      if (state_[q] == VarState::FreeZero) t_limit = kInf;
      double t_best = t_limit;
      int leave_pos = -1;
      double leave_pivot = 0.0;
      for (int i = 0; i < r_; ++i) {
        const double delta = sigma * w[i];
        if (std::abs(delta) <= opts_.pivot_tol) continue;
        const int bj = basic_[i];
        double t;
        if (delta > 0.0) {
          if (!std::isfinite(lo_[bj])) continue;
          t = (value_[bj] - lo_[bj]) / delta;
        } else {
          if (!std::isfinite(up_[bj])) continue;
          t = (up_[bj] - value_[bj]) / (-delta);
        }
        if (t < 0.0) t = 0.0;  // degenerate drift clamp
        const double tie = 1e-9 * (1.0 + std::abs(t_best));
        if (t < t_best - tie) {
          t_best = t;
          leave_pos = i;
          leave_pivot = std::abs(w[i]);
        } else if (t <= t_best + tie && leave_pos >= 0) {
          const bool better =
              bland_ ? bj < basic_[leave_pos] : std::abs(w[i]) > leave_pivot;
          if (better) {
            leave_pos = i;
            leave_pivot = std::abs(w[i]);
          }
        } else if (t <= t_best + tie && leave_pos < 0 && t <= t_limit) {
          // Tie against the entering variable's own span: prefer the pivot.
          t_best = std::min(t_best, t);
          leave_pos = i;
          leave_pivot = std::abs(w[i]);
        }
      }
      if (!std::isfinite(t_best)) {
        return phase1 ? LpStatus::NumericalBreakdown : LpStatus::Unbounded;
      }

      ++iterations_;
      // Steps below this are vertex shuffling, not progress; drift near a
      // degenerate vertex produces "steps" of 1e-10 and must not look like
      // progress. Once Bland engages it stays on for the rest of the phase —
      // disengaging re-opens the cycle it just broke.
      if (t_best <= 1e-7) {
        if (++degenerate_run_ > 3 * n_) bland_ = true;
      } else {
        degenerate_run_ = 0;
      }

      // Move the entering variable and update the basic values.
      value_[q] += sigma * t_best;
      for (int i = 0; i < r_; ++i) value_[basic_[i]] -= t_best * sigma * w[i];

      if (leave_pos < 0) {
        // Bound flip, basis unchanged.
        state_[q] = state_[q] == VarState::AtLower ? VarState::AtUpper
                                                   : VarState::AtLower;
        value_[q] = state_[q] == VarState::AtLower ? lo_[q] : up_[q];
        fresh = false;
        continue;
      }

      const int leaving = basic_[leave_pos];
      const double delta = sigma * w[leave_pos];
      state_[leaving] = delta > 0.0 ? VarState::AtLower : VarState::AtUpper;
      value_[leaving] = delta > 0.0 ? lo_[leaving] : up_[leaving];
      if (leaving >= n_) {
        // Artificial leaves for good.
        state_[leaving] = VarState::AtLower;
        value_[leaving] = 0.0;
        up_[leaving] = 0.0;
      }
      basic_[leave_pos] = q;
      state_[q] = VarState::Basic;

      // Product-form inverse update on the pivot row.
      const double piv = w[leave_pos];
      if (std::abs(piv) <= opts_.pivot_tol) return LpStatus::NumericalBreakdown;
      binv_.row(leave_pos) /= piv;
      for (int i = 0; i < r_; ++i) {
        if (i == leave_pos) continue;
        const double f = w[i];
        if (f != 0.0) binv_.row(i) -= f * binv_.row(leave_pos);
      }
      ++pivots_since_refactor_;
      fresh = false;
    }
  }

  void drive_out_artificials() {
    for (int i = 0; i < r_; ++i) {
      if (basic_[i] < n_) continue;
      // Degenerate pivot on any structural column with a usable element.
      int q = -1;
      double piv = 0.0;
      for (int j = 0; j < n_; ++j) {
        if (state_[j] == VarState::Basic || lo_[j] == up_[j]) continue;
        const double a = binv_.row(i).dot(lp_.Aeq.col(j));
        if (std::abs(a) > opts_.pivot_tol && std::abs(a) > std::abs(piv)) {
          piv = a;
          q = j;
        }
      }
      if (q < 0) continue;  // redundant row, artificial stays pinned at zero
      const int leaving = basic_[i];
      Vector w = binv_ * lp_.Aeq.col(q);
      const double entering_value = value_[q];
      state_[leaving] = VarState::AtLower;
      value_[leaving] = 0.0;
      up_[leaving] = 0.0;
      basic_[i] = q;
      state_[q] = VarState::Basic;
      binv_.row(i) /= w[i];
      for (int k = 0; k < r_; ++k) {
        if (k != i && w[k] != 0.0) binv_.row(k) -= w[k] * binv_.row(i);
      }
      value_[q] = entering_value;
      ++pivots_since_refactor_;
    }
    refactorize();
  }

  const LinearProgram& lp_;
  SolverOptions opts_;
  int n_ = 0, r_ = 0, total_ = 0;
  int max_iterations_ = 0;
  Vector lo_, up_, value_, art_sign_;
  std::vector<VarState> state_;
  std::vector<int> basic_;
  Matrix binv_;
  int iterations_ = 0;
  int pivots_since_refactor_ = 0;
  int degenerate_run_ = 0;
  bool bland_ = false;
};

LpSolution finalize(const LinearProgram& lp, Engine& engine, LpStatus status) {
  LpSolution sol;
  sol.status = status;
  sol.iterations = engine.iterations();
  sol.basis = engine.snapshot();
  if (status == LpStatus::Optimal || status == LpStatus::IterationLimit) {
    engine.refactorize();
    sol.x = engine.structural_x();
    sol.objective = lp.num_cols() > 0 ? lp.c.dot(sol.x) : 0.0;
    engine.duals(&sol.dual_y, &sol.reduced_costs);
  }
  return sol;
}

}  // namespace

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal:
      return "optimal";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
    case LpStatus::IterationLimit:
      return "iteration_limit";
    case LpStatus::NumericalBreakdown:
      return "numerical_breakdown";
  }
  return "?";
}

LpSolution solve_lp(const LinearProgram& lp, const SolverOptions& opts) {
  check_lp(lp);
  Engine engine(lp, opts);
  engine.init_cold();
  LpStatus st = engine.run_phase_one();
  if (st != LpStatus::Optimal) {
    LpSolution sol;
    sol.status = st;
    sol.iterations = engine.iterations();
    sol.basis = engine.snapshot();
    return sol;
  }
  st = engine.run_phase_two();
  return finalize(lp, engine, st);
}

LpSolution solve_lp(const LinearProgram& lp, const SolverOptions& opts,
                    const Basis& warm_start) {
  check_lp(lp);
  Engine engine(lp, opts);
  if (!engine.init_warm(warm_start)) {
    return solve_lp(lp, opts);
  }
  const LpStatus st = engine.run_phase_two();
  return finalize(lp, engine, st);
}

PhaseOneResult phase_one(const LinearProgram& lp, const SolverOptions& opts) {
  check_lp(lp);
  Engine engine(lp, opts);
  engine.init_cold();
  PhaseOneResult result;
  result.status = engine.run_phase_one();
  result.infeasibility = engine.artificial_objective();
  result.basis = engine.snapshot();
  if (result.status == LpStatus::Optimal) {
    engine.refactorize();
    result.x = engine.structural_x();
  }
  return result;
}

double complementarity_residual(const LinearProgram& lp, const LpSolution& sol,
                                double dual_tol) {
  double worst = 0.0;
  for (int j = 0; j < lp.num_cols(); ++j) {
    const double d = sol.reduced_costs[j];
    double slack = 0.0;
    if (d > dual_tol) {
      slack = std::isfinite(lp.lower[j]) ? sol.x[j] - lp.lower[j] : kInf;
    } else if (d < -dual_tol) {
      slack = std::isfinite(lp.upper[j]) ? lp.upper[j] - sol.x[j] : kInf;
    }
    worst = std::max(worst, std::abs(d) * std::abs(slack));
  }
  return worst;
}

double dual_objective(const LinearProgram& lp, const LpSolution& sol,
                      double dual_tol) {
  double obj = lp.num_rows() > 0 ? lp.beq.dot(sol.dual_y) : 0.0;
  for (int j = 0; j < lp.num_cols(); ++j) {
    const double d = sol.reduced_costs[j];
    if (d > dual_tol) {
      obj += d * lp.lower[j];
    } else if (d < -dual_tol) {
      obj += d * lp.upper[j];
    }
  }
  return obj;
}

void dump_lp(const LinearProgram& lp, std::ostream& os) {
  const int n = lp.num_cols();
  const int r = lp.num_rows();
  const auto put = [&os](double v) {
    os << std::setw(16);
    if (v == kInf) {
      os << "inf";
    } else if (v == -kInf) {
      os << "-inf";
    } else {
      os << std::setprecision(9) << v;
    }
  };
  os << "LP " << n << " " << r << "\n";
  for (int j = 0; j < n; ++j) put(lp.c[j]);
  os << "\n";
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) put(lp.Aeq(i, j));
    put(lp.beq[i]);
    os << "\n";
  }
  for (int j = 0; j < n; ++j) put(lp.lower[j]);
  os << "\n";
  for (int j = 0; j < n; ++j) put(lp.upper[j]);
  os << "\n";
}

}  // namespace bidual
