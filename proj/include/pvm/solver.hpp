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

#ifndef PVM_SOLVER_HPP_
#define PVM_SOLVER_HPP_

#include <optional>
#include <vector>

#include "pvm/coverage.hpp"
#include "pvm/data.hpp"
#include "pvm/greedy.hpp"
#include "pvm/lp_round.hpp"

namespace pvm {

/// Output of a single fit, covering both algorithms.
struct FitResult {
  PrototypeSolution solution;
  std::vector<GreedyStep> trace;             // greedy only
  std::optional<double> opt_lp;              // lp_round only
  std::optional<double> bound;               // n/e + OPT_LP
  std::vector<double> rounding_objectives;   // lp_round only
  int best_round = -1;
};

/// Runs the configured algorithm on a prebuilt incidence.
inline FitResult fit(const CoverageIncidence& inc, const std::vector<int>& labels,
                     const PvmConfig& config) {
  const double lambda = config.effective_lambda(inc.n);
  FitResult result;
  if (config.algorithm == Algorithm::greedy) {
    GreedyResult g = greedy_select(inc, labels, lambda);
    result.solution = std::move(g.solution);
    result.trace = std::move(g.trace);
  } else {
    const std::vector<LpSolution> lps = solve_all_class_lps(inc, labels, lambda);
    const double opt_lp = joint_lp_optimum(lps);
    RoundingResult r = randomized_round(lps, inc, labels, lambda,
                                        config.rounding_iterations, config.seed);
    result.solution = std::move(r.solution);
    result.opt_lp = opt_lp;
    result.bound = rounding_bound(inc.n, opt_lp);
    result.rounding_objectives = std::move(r.objectives);
    result.best_round = r.best_round;
  }
  return result;
}

}  // namespace pvm

#endif  // PVM_SOLVER_HPP_
