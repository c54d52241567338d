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

#ifndef PVM_GREEDY_HPP_
#define PVM_GREEDY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pvm/coverage.hpp"
#include "pvm/data.hpp"

namespace pvm {

/// One accepted greedy step.
struct GreedyStep {
  int candidate = 0;
  int cls = 0;  // 0-based
  long long delta_xi = 0;
  long long delta_eta = 0;
  double delta_obj = 0.0;
};

struct GreedyResult {
  PrototypeSolution solution;
  std::vector<GreedyStep> trace;
};

/// Mutable state of the greedy search. The new-coverage count per (j, l)
/// is maintained incrementally: when a point of class l becomes covered,
/// every candidate ball containing it loses one unit of gain for class l.
/// The wrong-class penalty per (j, l) never changes.
class GreedyState {
 public:
  GreedyState(const CoverageIncidence& inc, const std::vector<int>& labels, double lambda)
      : inc_(&inc), labels_(&labels), lambda_(lambda),
        sets_(static_cast<std::size_t>(inc.num_classes)),
        selected_(inc.m * static_cast<std::size_t>(inc.num_classes), 0),
        gain_(inc.m * static_cast<std::size_t>(inc.num_classes), 0),
        covered_(inc.n, 0) {
    for (std::size_t j = 0; j < inc.m; ++j)
      for (int l = 0; l < inc.num_classes; ++l)
        gain_[j * L() + static_cast<std::size_t>(l)] = inc.count(j, l);
  }

  struct Delta {
    long long delta_xi;
    long long delta_eta;
    double delta_obj;
  };

  /// ΔObj of adding candidate j to class l's set: Δξ − Δη − λ.
  Delta delta(std::size_t j, int l) const {
    if (selected_[j * L() + static_cast<std::size_t>(l)])
      throw input_error("candidate " + std::to_string(j) +
                        " already selected for class " + std::to_string(l + 1));
    const auto dxi = static_cast<long long>(gain_[j * L() + static_cast<std::size_t>(l)]);
    const auto deta = static_cast<long long>(inc_->wrong_count(j, l));
    return Delta{dxi, deta, static_cast<double>(dxi - deta) - lambda_};
  }

  void add(std::size_t j, int l) {
    if (selected_[j * L() + static_cast<std::size_t>(l)])
      throw input_error("candidate already selected");
    selected_[j * L() + static_cast<std::size_t>(l)] = 1;
    sets_[static_cast<std::size_t>(l)].push_back(static_cast<int>(j));
    for (int i : inc_->ball[j]) {
      const auto ui = static_cast<std::size_t>(i);
      if ((*labels_)[ui] != l + 1 || covered_[ui]) continue;
      covered_[ui] = 1;
      for (std::size_t j2 = 0; j2 < inc_->m; ++j2)
        if (inc_->is_covered(ui, j2)) --gain_[j2 * L() + static_cast<std::size_t>(l)];
    }
  }

  bool is_selected(std::size_t j, int l) const {
    return selected_[j * L() + static_cast<std::size_t>(l)] != 0;
  }

  const std::vector<std::vector<int>>& sets() const { return sets_; }

 private:
  std::size_t L() const { return static_cast<std::size_t>(inc_->num_classes); }

  const CoverageIncidence* inc_;
  const std::vector<int>* labels_;
  double lambda_;
  std::vector<std::vector<int>> sets_;
  std::vector<std::uint8_t> selected_;
  std::vector<int> gain_;
  std::vector<std::uint8_t> covered_;
};

/// Greedy search: repeatedly add the (candidate, class) pair that most
/// decreases the objective, while the best improvement is strictly
/// positive. Ties break toward the smallest class index, then the
/// smallest candidate index. When only_class is set, the scan is
/// restricted to that class (0-based).
inline GreedyResult greedy_select(const CoverageIncidence& inc,
                                  const std::vector<int>& labels, double lambda,
                                  std::optional<int> only_class = std::nullopt) {
  GreedyState state(inc, labels, lambda);
  std::vector<GreedyStep> trace;
  const int l_lo = only_class ? *only_class : 0;
  const int l_hi = only_class ? *only_class + 1 : inc.num_classes;
  for (;;) {
    double best = 0.0;
    std::size_t best_j = 0;
    int best_l = -1;
    GreedyState::Delta best_delta{0, 0, 0.0};
    for (int l = l_lo; l < l_hi; ++l)
      for (std::size_t j = 0; j < inc.m; ++j) {
        if (state.is_selected(j, l)) continue;
        const auto d = state.delta(j, l);
        if (d.delta_obj > best) {
          best = d.delta_obj;
          best_j = j;
          best_l = l;
          best_delta = d;
        }
      }
    if (best_l < 0) break;  // no strictly positive step left
    state.add(best_j, best_l);
    trace.push_back(GreedyStep{static_cast<int>(best_j), best_l, best_delta.delta_xi,
                               best_delta.delta_eta, best_delta.delta_obj});
  }
  GreedyResult result;
  result.solution.sets = state.sets();
  result.solution.objective = evaluate_objective(inc, labels, result.solution.sets, lambda);
  result.trace = std::move(trace);
  return result;
}

}  // namespace pvm

#endif  // PVM_GREEDY_HPP_
