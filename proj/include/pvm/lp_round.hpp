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

#ifndef PVM_LP_ROUND_HPP_
#define PVM_LP_ROUND_HPP_

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "pvm/coverage.hpp"
#include "pvm/core.hpp"
#include "pvm/data.hpp"
#include "pvm/simplex.hpp"

namespace pvm {

/// The per-class prize-collecting set cover LP. Variables are one alpha
/// per candidate plus one xi per class member; the eta slacks of the joint
/// program are eliminated into the candidate costs beforehand (their
/// constraints are always tight).
struct ClassLp {
  int cls = 0;  // 0-based
  std::vector<double> cost;     // per candidate: lambda + wrong-class coverage
  std::vector<int> members;     // training indices of this class
  const CoverageIncidence* inc = nullptr;
};

inline ClassLp build_class_lp(const CoverageIncidence& inc, const std::vector<int>& labels,
                              double lambda, int cls) {
  if (cls < 0 || cls >= inc.num_classes) throw input_error("class index out of range");
  ClassLp lp;
  lp.cls = cls;
  lp.inc = &inc;
  lp.cost.resize(inc.m);
  for (std::size_t j = 0; j < inc.m; ++j) lp.cost[j] = prototype_cost(inc, lambda, j, cls);
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == cls + 1) lp.members.push_back(static_cast<int>(i));
  return lp;
}

struct LpSolution {
  std::vector<double> alpha;  // per candidate, in [0, 1]
  std::vector<double> xi;     // per class member
  double objective = 0.0;
};

/// Solves the relaxed per-class LP. Upper-bound rows alpha_j <= 1 are
/// added only for zero-cost candidates; any positive-cost alpha exceeding
/// one could be clamped to one without losing feasibility or raising the
/// objective, so the simplex optimum already satisfies the bound.
inline LpSolution solve_class_lp(const ClassLp& lp) {
  const std::size_t m = lp.cost.size();
  const std::size_t k = lp.members.size();
  LpProblem problem;
  problem.num_vars = m + k;
  problem.objective.assign(m + k, 1.0);
  for (std::size_t j = 0; j < m; ++j) problem.objective[j] = lp.cost[j];
  for (std::size_t r = 0; r < k; ++r) {
    LpProblem::Row row;
    row.coeffs.assign(m + k, 0.0);
    const auto i = static_cast<std::size_t>(lp.members[r]);
    for (std::size_t j = 0; j < m; ++j)
      if (lp.inc->is_covered(i, j)) row.coeffs[j] = 1.0;
    row.coeffs[m + r] = 1.0;
    row.op = '>';
    row.rhs = 1.0;
    problem.rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (lp.cost[j] > 0.0) continue;
    LpProblem::Row row;
    row.coeffs.assign(m + k, 0.0);
    row.coeffs[j] = 1.0;
    row.op = '<';
    row.rhs = 1.0;
    problem.rows.push_back(std::move(row));
  }
  const LpResult res = solve_lp(problem);
  if (res.status != LpResult::Status::optimal)
    throw numerical_error("per-class LP did not solve to optimality");
  LpSolution sol;
  sol.alpha.assign(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(m));
  sol.xi.assign(res.x.begin() + static_cast<std::ptrdiff_t>(m), res.x.end());
  for (double& a : sol.alpha) {
    if (a < -1e-9 || a > 1.0 + 1e-9)
      throw numerical_error("LP alpha outside [0,1]: " + std::to_string(a));
    a = std::min(1.0, std::max(0.0, a));
  }
  sol.objective = res.objective;
  return sol;
}

/// Solves all L per-class LPs. The joint relaxed optimum is the sum of
/// the per-class objectives.
inline std::vector<LpSolution> solve_all_class_lps(const CoverageIncidence& inc,
                                                   const std::vector<int>& labels,
                                                   double lambda) {
  std::vector<LpSolution> out;
  out.reserve(static_cast<std::size_t>(inc.num_classes));
  for (int l = 0; l < inc.num_classes; ++l)
    out.push_back(solve_class_lp(build_class_lp(inc, labels, lambda, l)));
  return out;
}

inline double joint_lp_optimum(const std::vector<LpSolution>& lps) {
  double s = 0.0;
  for (const auto& lp : lps) s += lp.objective;
  return s;
}

/// Expected-objective bound for one rounding draw: n/e + OPT_LP.
inline double rounding_bound(std::size_t n, double opt_lp) {
  if (n < 1) throw input_error("rounding_bound requires n >= 1");
  if (opt_lp < 0.0) throw input_error("rounding_bound requires opt_lp >= 0");
  return static_cast<double>(n) / std::exp(1.0) + opt_lp;
}

/// Slacks of one rounded draw: s_total counts points with no own-class
/// prototype, t per point counts wrong-class coverings.
struct DrawObjective {
  long long s_total = 0;
  long long t_total = 0;
  long long selected = 0;
  double objective = 0.0;
};

inline DrawObjective draw_objective(const CoverageIncidence& inc,
                                    const std::vector<int>& labels,
                                    const std::vector<std::vector<int>>& sets,
                                    double lambda,
                                    std::vector<long long>* t_per_point = nullptr) {
  std::vector<std::uint8_t> own(inc.n, 0);
  if (t_per_point) t_per_point->assign(inc.n, 0);
  DrawObjective d;
  for (std::size_t l = 0; l < sets.size(); ++l) {
    d.selected += static_cast<long long>(sets[l].size());
    for (int j : sets[l])
      for (int i : inc.ball[static_cast<std::size_t>(j)]) {
        const auto ui = static_cast<std::size_t>(i);
        if (labels[ui] == static_cast<int>(l) + 1) {
          own[ui] = 1;
        } else {
          ++d.t_total;
          if (t_per_point) ++(*t_per_point)[ui];
        }
      }
  }
  for (std::size_t i = 0; i < inc.n; ++i)
    if (!own[i]) ++d.s_total;
  d.objective = static_cast<double>(d.s_total + d.t_total) +
                lambda * static_cast<double>(d.selected);
  return d;
}

struct RoundingResult {
  PrototypeSolution solution;
  int best_round = 0;  // 0-based index of the winning draw
  double best_objective = 0.0;
  std::vector<double> objectives;  // one per draw
};

/// Best-of-B randomized rounding. Bernoulli draws consume the seeded
/// stream in fixed order: draw-major, then class, then candidate, so a
/// given (seed, B) always reproduces the same solution. Ties on the
/// minimum objective keep the earliest draw.
inline RoundingResult randomized_round(const std::vector<LpSolution>& lps,
                                       const CoverageIncidence& inc,
                                       const std::vector<int>& labels, double lambda,
                                       int rounds, std::uint64_t seed) {
  if (rounds < 1) throw input_error("rounding iterations must be >= 1");
  if (lps.size() != static_cast<std::size_t>(inc.num_classes))
    throw input_error("one LP solution per class required");
  Rng rng(seed);
  RoundingResult result;
  result.objectives.reserve(static_cast<std::size_t>(rounds));
  std::vector<std::vector<int>> best_sets;
  for (int b = 0; b < rounds; ++b) {
    std::vector<std::vector<int>> sets(lps.size());
    for (std::size_t l = 0; l < lps.size(); ++l)
      for (std::size_t j = 0; j < inc.m; ++j)
        if (rng.uniform01() < lps[l].alpha[j]) sets[l].push_back(static_cast<int>(j));
    const DrawObjective d = draw_objective(inc, labels, sets, lambda);
    result.objectives.push_back(d.objective);
    if (b == 0 || d.objective < result.best_objective) {
      result.best_objective = d.objective;
      result.best_round = b;
      best_sets = std::move(sets);
    }
  }
  result.solution.sets = std::move(best_sets);
  result.solution.objective = evaluate_objective(inc, labels, result.solution.sets, lambda);
  return result;
}

/// Plain-text export of a per-class LP (lp_solve-style): objective row,
/// one constraint row per class member, then bounds.
inline void write_lp_text(std::ostream& os, const ClassLp& lp) {
  os << "/* prize-collecting set cover LP, class " << lp.cls + 1 << " */\n";
  os << "min:";
  for (std::size_t j = 0; j < lp.cost.size(); ++j)
    os << " + " << lp.cost[j] << " a" << j;
  for (std::size_t r = 0; r < lp.members.size(); ++r) os << " + xi" << lp.members[r];
  os << ";\n";
  for (std::size_t r = 0; r < lp.members.size(); ++r) {
    const auto i = static_cast<std::size_t>(lp.members[r]);
    os << "cover_" << i << ":";
    for (std::size_t j = 0; j < lp.cost.size(); ++j)
      if (lp.inc->is_covered(i, j)) os << " + a" << j;
    os << " + xi" << i << " >= 1;\n";
  }
  for (std::size_t j = 0; j < lp.cost.size(); ++j) os << "a" << j << " <= 1;\n";
}

}  // namespace pvm

#endif  // PVM_LP_ROUND_HPP_
