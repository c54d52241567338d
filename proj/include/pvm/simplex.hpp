// Copyright 2026 The PVM Authors
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

#ifndef PVM_SIMPLEX_HPP_
#define PVM_SIMPLEX_HPP_

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "pvm/core.hpp"

namespace pvm {

/// minimize c.x subject to rows of (coeffs op rhs) and x >= 0,
/// with op one of '<', '>', '='.
struct LpProblem {
  struct Row {
    std::vector<double> coeffs;
    char op = '>';
    double rhs = 0.0;
  };
  std::size_t num_vars = 0;
  std::vector<double> objective;
  std::vector<Row> rows;
};

struct LpResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::optimal;
  std::vector<double> x;
  double objective = 0.0;
};

/// Dense two-phase tableau simplex. Phase 1 runs only for rows without a
/// ready identity column; anti-cycling is handled by switching from the
/// largest-coefficient rule to Bland's rule after an iteration budget.
class SimplexSolver {
 public:
  explicit SimplexSolver(double pivot_tol = 1e-9) : tol_(pivot_tol) {}

  LpResult solve(const LpProblem& problem) const {
    const std::size_t n = problem.num_vars;
    const std::size_t m = problem.rows.size();

    // Normalized rows: coeffs.x (+ slack) = rhs with rhs >= 0.
    // slack_sign: +1 for '<', -1 for '>', 0 for '='.
    std::vector<std::vector<double>> a(m, std::vector<double>(n, 0.0));
    std::vector<double> b(m, 0.0);
    std::vector<int> slack_sign(m, 0);
    for (std::size_t r = 0; r < m; ++r) {
      const auto& row = problem.rows[r];
      if (row.coeffs.size() != n) throw input_error("LP row size mismatch");
      double sign = 1.0;
      char op = row.op;
      if (row.rhs < 0.0) {
        sign = -1.0;
        if (op == '<') op = '>';
        else if (op == '>') op = '<';
      }
      for (std::size_t c = 0; c < n; ++c) a[r][c] = sign * row.coeffs[c];
      b[r] = sign * row.rhs;
      slack_sign[r] = op == '<' ? 1 : (op == '>' ? -1 : 0);
    }

    // Column layout: [structural | slack/surplus | artificial].
    std::size_t num_slack = 0;
    for (std::size_t r = 0; r < m; ++r)
      if (slack_sign[r] != 0) ++num_slack;

    std::vector<std::size_t> slack_col(m, SIZE_MAX);
    std::size_t next = n;
    for (std::size_t r = 0; r < m; ++r)
      if (slack_sign[r] != 0) slack_col[r] = next++;

    // Rows whose slack is +1 start basic on the slack; all others need an
    // artificial variable.
    std::vector<std::size_t> art_col(m, SIZE_MAX);
    std::size_t num_art = 0;
    for (std::size_t r = 0; r < m; ++r)
      if (slack_sign[r] != 1) art_col[r] = n + num_slack + num_art++;

    const std::size_t total = n + num_slack + num_art;
    // tableau: m rows of [columns | rhs]
    std::vector<std::vector<double>> t(m, std::vector<double>(total + 1, 0.0));
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < n; ++c) t[r][c] = a[r][c];
      if (slack_sign[r] != 0) t[r][slack_col[r]] = static_cast<double>(slack_sign[r]);
      if (art_col[r] != SIZE_MAX) t[r][art_col[r]] = 1.0;
      t[r][total] = b[r];
      basis[r] = art_col[r] != SIZE_MAX ? art_col[r] : slack_col[r];
    }

    LpResult result;
    if (num_art > 0) {
      std::vector<double> phase1_cost(total, 0.0);
      for (std::size_t r = 0; r < m; ++r)
        if (art_col[r] != SIZE_MAX) phase1_cost[art_col[r]] = 1.0;
      if (!run(t, basis, phase1_cost, total)) {
        result.status = LpResult::Status::unbounded;  // cannot happen in phase 1
        return result;
      }
      double art_sum = 0.0;
      for (std::size_t r = 0; r < m; ++r)
        if (basis[r] >= n + num_slack) art_sum += t[r][total];
      if (art_sum > 1e-7) {
        result.status = LpResult::Status::infeasible;
        return result;
      }
      // Pivot remaining artificials out of the basis where possible.
      for (std::size_t r = 0; r < m; ++r) {
        if (basis[r] < n + num_slack) continue;
        std::size_t c = 0;
        for (; c < n + num_slack; ++c)
          if (std::abs(t[r][c]) > tol_) break;
        if (c < n + num_slack) pivot(t, basis, r, c, total);
        // A fully zero row is redundant; its artificial stays basic at 0.
      }
    }

    std::vector<double> cost(total, 0.0);
    for (std::size_t c = 0; c < n; ++c) cost[c] = problem.objective[c];
    // Artificial columns are barred from re-entering by giving them an
    // effectively infinite cost marker handled in run().
    if (!run(t, basis, cost, total, n + num_slack)) {
      result.status = LpResult::Status::unbounded;
      return result;
    }

    result.x.assign(n, 0.0);
    for (std::size_t r = 0; r < m; ++r)
      if (basis[r] < n) result.x[basis[r]] = t[r][total];
    result.objective = 0.0;
    for (std::size_t c = 0; c < n; ++c) result.objective += problem.objective[c] * result.x[c];
    result.status = LpResult::Status::optimal;
    return result;
  }

 private:
  // Runs the simplex on the tableau with the given cost vector. Columns at
  // index >= max_enter_col never enter the basis. Returns false on
  // unboundedness.
  bool run(std::vector<std::vector<double>>& t, std::vector<std::size_t>& basis,
           const std::vector<double>& cost, std::size_t total,
           std::size_t max_enter_col = SIZE_MAX) const {
    const std::size_t m = t.size();
    if (max_enter_col == SIZE_MAX) max_enter_col = total;
    // Reduced-cost row z: z_j = cost_j - cost_B . column_j.
    std::vector<double> z(total + 1, 0.0);
    for (std::size_t c = 0; c <= total; ++c) {
      double v = c < total ? cost[c] : 0.0;
      for (std::size_t r = 0; r < m; ++r) v -= cost[basis[r]] * t[r][c];
      z[c] = c < total ? v : -v;  // z[total] holds the running objective
    }

    const std::size_t bland_after = 50 * (m + total) + 1000;
    for (std::size_t iter = 0;; ++iter) {
      if (iter > bland_after + 200000)
        throw numerical_error("simplex failed to converge");
      const bool bland = iter >= bland_after;
      // Entering column.
      std::size_t enter = SIZE_MAX;
      double best = -tol_;
      for (std::size_t c = 0; c < max_enter_col; ++c) {
        if (z[c] < best) {
          enter = c;
          if (bland) break;
          best = z[c];
        } else if (bland && z[c] < -tol_) {
          enter = c;
          break;
        }
      }
      if (enter == SIZE_MAX) return true;  // optimal
      // Ratio test; Bland's rule breaks ties by smallest basis index.
      std::size_t leave = SIZE_MAX;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < m; ++r) {
        if (t[r][enter] > tol_) {
          const double ratio = t[r][total] / t[r][enter];
          if (ratio < best_ratio - 1e-12 ||
              (ratio < best_ratio + 1e-12 && leave != SIZE_MAX &&
               basis[r] < basis[leave])) {
            best_ratio = ratio;
            leave = r;
          }
        }
      }
      if (leave == SIZE_MAX) return false;  // unbounded
      pivot_with_z(t, z, basis, leave, enter, total);
    }
  }

  void pivot(std::vector<std::vector<double>>& t, std::vector<std::size_t>& basis,
             std::size_t row, std::size_t col, std::size_t total) const {
    const double p = t[row][col];
    for (std::size_t c = 0; c <= total; ++c) t[row][c] /= p;
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (r == row) continue;
      const double f = t[r][col];
      if (std::abs(f) <= tol_ * 1e-3) continue;
      for (std::size_t c = 0; c <= total; ++c) t[r][c] -= f * t[row][c];
    }
    basis[row] = col;
  }

  void pivot_with_z(std::vector<std::vector<double>>& t, std::vector<double>& z,
                    std::vector<std::size_t>& basis, std::size_t row,
                    std::size_t col, std::size_t total) const {
    pivot(t, basis, row, col, total);
    const double f = z[col];
    if (std::abs(f) > 0.0)
      for (std::size_t c = 0; c <= total; ++c) z[c] -= f * t[row][c];
  }

  double tol_;
};

inline LpResult solve_lp(const LpProblem& problem, double pivot_tol = 1e-9) {
  return SimplexSolver(pivot_tol).solve(problem);
}

}  // namespace pvm

#endif  // PVM_SIMPLEX_HPP_
