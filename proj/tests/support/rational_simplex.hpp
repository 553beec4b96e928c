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
//
// Exact LP reference for tests: converts a bounded-variable LP to standard
// form over rationals and runs textbook two-phase tableau simplex with
// Bland's rule throughout. Slow and simple; every number is exact, so the
// status it reports (optimal / infeasible / unbounded) is the truth.

#ifndef BIDUAL_TESTS_RATIONAL_SIMPLEX_HPP
#define BIDUAL_TESTS_RATIONAL_SIMPLEX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <vector>

#include "bidual/simplex.hpp"

namespace bidual_tests {

using Rational = boost::multiprecision::cpp_rational;

enum class ExactStatus { Optimal, Infeasible, Unbounded };

struct ExactResult {
  ExactStatus status = ExactStatus::Infeasible;
  Rational value = 0;
  double value_as_double() const { return static_cast<double>(value); }
};

namespace detail {

struct StdForm {
  std::vector<std::vector<Rational>> rows;  // A y = b, y >= 0
  std::vector<Rational> b;
  std::vector<Rational> c;
  Rational c0 = 0;  // objective constant from substitutions
};

// min c.y (+ c0), A y = b, y >= 0, exact two-phase tableau simplex.
inline ExactResult solve_standard(StdForm sf) {
  const int r = static_cast<int>(sf.b.size());
  const int n = static_cast<int>(sf.c.size());
  // Make b >= 0, append artificials.
  std::vector<std::vector<Rational>> tab(r, std::vector<Rational>(n + r, 0));
  std::vector<Rational> rhs(r);
  for (int i = 0; i < r; ++i) {
    const bool flip = sf.b[i] < 0;
    for (int j = 0; j < n; ++j) tab[i][j] = flip ? -sf.rows[i][j] : sf.rows[i][j];
    rhs[i] = flip ? -sf.b[i] : sf.b[i];
    tab[i][n + i] = 1;
  }
  std::vector<int> basis(r);
  for (int i = 0; i < r; ++i) basis[i] = n + i;
  std::vector<bool> row_alive(r, true);

  const auto pivot = [&](int pr, int pc) {
    const Rational p = tab[pr][pc];
    for (auto& v : tab[pr]) v /= p;
    rhs[pr] /= p;
    for (int i = 0; i < r; ++i) {
      if (i == pr || !row_alive[i]) continue;
      const Rational f = tab[i][pc];
      if (f == 0) continue;
      for (int j = 0; j < n + r; ++j) tab[i][j] -= f * tab[pr][j];
      rhs[i] -= f * rhs[pr];
    }
    basis[pr] = pc;
  };

  // One simplex phase with Bland's rule; cost(j) gives the active objective.
  const auto run = [&](const auto& cost, int limit_col) -> bool {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < limit_col && enter < 0; ++j) {
        bool in_basis = false;
        for (int i = 0; i < r; ++i) {
          if (row_alive[i] && basis[i] == j) in_basis = true;
        }
        if (in_basis) continue;
        Rational d = cost(j);
        for (int i = 0; i < r; ++i) {
          if (row_alive[i]) d -= cost(basis[i]) * tab[i][j];
        }
        if (d < 0) enter = j;
      }
      if (enter < 0) return true;  // optimal for this phase
      int leave = -1;
      Rational best_t = 0;
      for (int i = 0; i < r; ++i) {
        if (!row_alive[i] || tab[i][enter] <= 0) continue;
        const Rational t = rhs[i] / tab[i][enter];
        if (leave < 0 || t < best_t ||
            (t == best_t && basis[i] < basis[leave])) {
          leave = i;
          best_t = t;
        }
      }
      if (leave < 0) return false;  // unbounded direction
      pivot(leave, enter);
    }
  };

  // Phase one: minimize the artificial sum.
  const auto art_cost = [&](int j) -> Rational { return j >= n ? 1 : 0; };
  run(art_cost, n + r);
  Rational infeas = 0;
  for (int i = 0; i < r; ++i) {
    if (row_alive[i] && basis[i] >= n) infeas += rhs[i];
  }
  if (infeas != 0) return {ExactStatus::Infeasible, 0};
  // Drive artificials out; rows without a structural pivot are redundant.
  for (int i = 0; i < r; ++i) {
    if (!row_alive[i] || basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n && col < 0; ++j) {
      if (tab[i][j] != 0) col = j;
    }
    if (col >= 0) {
      pivot(i, col);
    } else {
      row_alive[i] = false;
    }
  }

  const auto real_cost = [&](int j) -> Rational { return j < n ? sf.c[j] : 0; };
  if (!run(real_cost, n)) return {ExactStatus::Unbounded, 0};
  Rational value = sf.c0;
  for (int i = 0; i < r; ++i) {
    if (row_alive[i] && basis[i] < n) value += sf.c[basis[i]] * rhs[i];
  }
  return {ExactStatus::Optimal, value};
}

}  // namespace detail

inline ExactResult exact_solve(const bidual::LinearProgram& lp) {
  const int n = lp.num_cols();
  const int r0 = lp.num_rows();
  // Build the substituted columns against the original rows first; span rows
  // (y + s = u - l for doubly bounded columns) are appended afterwards.
  std::vector<std::vector<Rational>> cols;  // each of length r0
  std::vector<Rational> costs;
  std::vector<Rational> b(r0);
  std::vector<std::pair<int, Rational>> spans;  // (y column, u - l)
  Rational c0 = 0;
  for (int i = 0; i < r0; ++i) b[i] = Rational(lp.beq[i]);

  for (int j = 0; j < n; ++j) {
    std::vector<Rational> col(r0);
    for (int i = 0; i < r0; ++i) col[i] = Rational(lp.Aeq(i, j));
    const Rational cj(lp.c[j]);
    const bool lo_fin = std::isfinite(lp.lower[j]);
    const bool up_fin = std::isfinite(lp.upper[j]);
    if (lo_fin && up_fin && lp.lower[j] == lp.upper[j]) {
      const Rational v(lp.lower[j]);
      for (int i = 0; i < r0; ++i) b[i] -= col[i] * v;
      c0 += cj * v;
    } else if (lo_fin) {
      // x = l + y, y >= 0, plus a span row when the upper bound is finite.
      const Rational l(lp.lower[j]);
      for (int i = 0; i < r0; ++i) b[i] -= col[i] * l;
      c0 += cj * l;
      costs.push_back(cj);
      cols.push_back(col);
      if (up_fin) {
        spans.emplace_back(static_cast<int>(cols.size()) - 1,
                           Rational(lp.upper[j]) - l);
      }
    } else if (up_fin) {
      // x = u - y, y >= 0.
      const Rational u(lp.upper[j]);
      for (int i = 0; i < r0; ++i) b[i] -= col[i] * u;
      c0 += cj * u;
      for (auto& v : col) v = -v;
      costs.push_back(-cj);
      cols.push_back(col);
    } else {
      // Free: x = p - q.
      costs.push_back(cj);
      cols.push_back(col);
      for (auto& v : col) v = -v;
      costs.push_back(-cj);
      cols.push_back(col);
    }
  }

  const int base = static_cast<int>(cols.size());
  const int extra = static_cast<int>(spans.size());
  const int rows = r0 + extra;
  detail::StdForm sf;
  sf.c0 = c0;
  sf.c = std::move(costs);
  sf.c.resize(base + extra, 0);  // slack columns of the span rows
  sf.b = std::move(b);
  sf.b.resize(rows);
  sf.rows.assign(rows, std::vector<Rational>(base + extra, 0));
  for (int i = 0; i < r0; ++i) {
    for (int j = 0; j < base; ++j) sf.rows[i][j] = cols[j][i];
  }
  for (int k = 0; k < extra; ++k) {
    sf.rows[r0 + k][spans[k].first] = 1;
    sf.rows[r0 + k][base + k] = 1;
    sf.b[r0 + k] = spans[k].second;
  }
  return detail::solve_standard(std::move(sf));
}

}  // namespace bidual_tests

#endif  // BIDUAL_TESTS_RATIONAL_SIMPLEX_HPP
