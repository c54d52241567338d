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

#ifndef PVM_COVERAGE_HPP_
#define PVM_COVERAGE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "pvm/core.hpp"
#include "pvm/data.hpp"

namespace pvm {

/// Incidence of training points in the candidate epsilon-balls.
/// Coverage is STRICT: x_i is in B_eps(z_j) iff D[i][j] < eps. Points at
/// distance exactly eps are not covered.
struct CoverageIncidence {
  std::size_t n = 0;
  std::size_t m = 0;
  int num_classes = 0;
  double epsilon = 0.0;
  std::vector<std::uint8_t> covers;      // n*m, row-major
  std::vector<std::vector<int>> ball;    // per candidate j, covered point ids
  std::vector<int> class_count;          // m*L, |ball_j ∩ X_l|

  bool is_covered(std::size_t i, std::size_t j) const { return covers[i * m + j] != 0; }
  int count(std::size_t j, int l) const {
    return class_count[j * static_cast<std::size_t>(num_classes) + static_cast<std::size_t>(l)];
  }
  int ball_size(std::size_t j) const { return static_cast<int>(ball[j].size()); }
  /// Wrong-class points inside B_eps(z_j) for class l: |ball_j| - |ball_j ∩ X_l|.
  int wrong_count(std::size_t j, int l) const { return ball_size(j) - count(j, l); }
};

inline CoverageIncidence build_incidence(const Matrix& d, const std::vector<int>& labels,
                                         int num_classes, double epsilon) {
  if (epsilon <= 0.0) throw input_error("epsilon must be positive");
  if (d.rows() != labels.size()) throw input_error("labels/dissimilarity size mismatch");
  CoverageIncidence inc;
  inc.n = d.rows();
  inc.m = d.cols();
  inc.num_classes = num_classes;
  inc.epsilon = epsilon;
  inc.covers.assign(inc.n * inc.m, 0);
  inc.ball.assign(inc.m, {});
  inc.class_count.assign(inc.m * static_cast<std::size_t>(num_classes), 0);
  for (std::size_t i = 0; i < inc.n; ++i) {
    const auto l = static_cast<std::size_t>(labels[i] - 1);
    for (std::size_t j = 0; j < inc.m; ++j) {
      if (d(i, j) < epsilon) {
        inc.covers[i * inc.m + j] = 1;
        inc.ball[j].push_back(static_cast<int>(i));
        ++inc.class_count[j * static_cast<std::size_t>(num_classes) + l];
      }
    }
  }
  return inc;
}

/// Prize-collecting cost of adding z_j to class l's prototype set:
/// lambda plus the wrong-class points inside its ball.
inline double prototype_cost(const CoverageIncidence& inc, double lambda,
                             std::size_t j, int l) {
  if (j >= inc.m || l < 0 || l >= inc.num_classes)
    throw input_error("prototype_cost: index out of range");
  return lambda + static_cast<double>(inc.wrong_count(j, l));
}

/// Full objective of a prototype assignment:
///   xi  = points with no own-class prototype ball covering them
///   eta = total wrong-class coverings (no cap per point)
///   total = xi + eta + lambda * #prototypes
inline ObjectiveBreakdown evaluate_objective(const CoverageIncidence& inc,
                                             const std::vector<int>& labels,
                                             const std::vector<std::vector<int>>& sets,
                                             double lambda) {
  if (sets.size() != static_cast<std::size_t>(inc.num_classes))
    throw input_error("solution class count mismatch");
  std::vector<std::uint8_t> own_covered(inc.n, 0);
  long long eta = 0;
  long long count = 0;
  for (std::size_t l = 0; l < sets.size(); ++l) {
    for (int j : sets[l]) {
      if (j < 0 || static_cast<std::size_t>(j) >= inc.m)
        throw input_error("prototype index out of range: " + std::to_string(j));
      ++count;
      for (int i : inc.ball[static_cast<std::size_t>(j)]) {
        if (labels[static_cast<std::size_t>(i)] == static_cast<int>(l) + 1)
          own_covered[static_cast<std::size_t>(i)] = 1;
        else
          ++eta;
      }
    }
  }
  long long xi = 0;
  for (std::size_t i = 0; i < inc.n; ++i)
    if (!own_covered[i]) ++xi;
  return ObjectiveBreakdown::make(xi, eta, count, lambda);
}

}  // namespace pvm

#endif  // PVM_COVERAGE_HPP_
