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

#ifndef PVM_BRUTE_FORCE_HPP_
#define PVM_BRUTE_FORCE_HPP_

#include <cstdint>
#include <vector>

#include "pvm/coverage.hpp"
#include "pvm/data.hpp"

namespace pvm {

struct BruteForceResult {
  long long slack_total = 0;   // xi + eta of the optimal assignment
  long long proto_count = 0;
  double objective = 0.0;      // slack_total + lambda * proto_count
  std::vector<std::vector<int>> sets;
};

/// Exact minimum of the objective by exhaustive enumeration. The problem
/// separates by class, so enumeration is 2^m per class rather than
/// 2^(m*L). Budget: m * L <= 24. Ties keep the lexicographically first
/// subset in mask order.
inline BruteForceResult brute_force_optimum(const CoverageIncidence& inc,
                                            const std::vector<int>& labels,
                                            double lambda) {
  if (inc.m * static_cast<std::size_t>(inc.num_classes) > 24)
    throw input_error("brute force budget exceeded (m*L > 24)");
  BruteForceResult result;
  result.sets.resize(static_cast<std::size_t>(inc.num_classes));
  for (int l = 0; l < inc.num_classes; ++l) {
    std::vector<int> members;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l + 1) members.push_back(static_cast<int>(i));

    long long best_slack = 0;
    long long best_count = 0;
    double best_obj = 0.0;
    std::uint32_t best_mask = 0;
    bool have_best = false;
    const std::uint32_t limit = 1u << inc.m;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
      long long wrong = 0;
      long long count = 0;
      for (std::size_t j = 0; j < inc.m; ++j)
        if (mask & (1u << j)) {
          ++count;
          wrong += inc.wrong_count(j, l);
        }
      long long uncovered = 0;
      for (int i : members) {
        bool cov = false;
        for (std::size_t j = 0; j < inc.m && !cov; ++j)
          if ((mask & (1u << j)) && inc.is_covered(static_cast<std::size_t>(i), j)) cov = true;
        if (!cov) ++uncovered;
      }
      const long long slack = uncovered + wrong;
      const double obj = static_cast<double>(slack) + lambda * static_cast<double>(count);
      if (!have_best || obj < best_obj) {
        have_best = true;
        best_obj = obj;
        best_slack = slack;
        best_count = count;
        best_mask = mask;
      }
    }
    result.slack_total += best_slack;
    result.proto_count += best_count;
    for (std::size_t j = 0; j < inc.m; ++j)
      if (best_mask & (1u << j))
        result.sets[static_cast<std::size_t>(l)].push_back(static_cast<int>(j));
  }
  result.objective = static_cast<double>(result.slack_total) +
                     lambda * static_cast<double>(result.proto_count);
  return result;
}

}  // namespace pvm

#endif  // PVM_BRUTE_FORCE_HPP_
