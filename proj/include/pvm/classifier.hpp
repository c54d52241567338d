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

#ifndef PVM_CLASSIFIER_HPP_
#define PVM_CLASSIFIER_HPP_

#include <limits>
#include <optional>
#include <vector>

#include "pvm/core.hpp"
#include "pvm/data.hpp"

namespace pvm {

struct Prediction {
  int label = 0;        // 1-based class
  int prototype = -1;   // candidate index of the nearest prototype
  double distance = 0.0;
};

struct ClassificationResult {
  std::vector<Prediction> predictions;
  std::optional<double> error;

  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(predictions.size());
    for (const auto& p : predictions) out.push_back(p.label);
    return out;
  }
};

/// Nearest-prototype rule: each query gets the class whose prototype set
/// contains the closest candidate. Ties break toward the smallest class
/// label, then the smallest prototype index. Empty sets act as distance
/// infinity.
inline ClassificationResult classify(const Matrix& d_query, const PrototypeSolution& sol) {
  bool any = false;
  for (const auto& s : sol.sets)
    if (!s.empty()) any = true;
  if (!any) throw input_error("all prototype sets are empty");
  ClassificationResult result;
  result.predictions.resize(d_query.rows());
  for (std::size_t q = 0; q < d_query.rows(); ++q) {
    Prediction best;
    best.distance = std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < sol.sets.size(); ++l) {
      // Within a class, the smallest candidate index wins distance ties.
      int cls_proto = -1;
      double cls_dist = std::numeric_limits<double>::infinity();
      for (int j : sol.sets[l]) {
        if (j < 0 || static_cast<std::size_t>(j) >= d_query.cols())
          throw input_error("prototype index out of range for query matrix");
        const double dist = d_query(q, static_cast<std::size_t>(j));
        if (dist < cls_dist || (dist == cls_dist && j < cls_proto)) {
          cls_dist = dist;
          cls_proto = j;
        }
      }
      if (cls_dist < best.distance) {
        best.distance = cls_dist;
        best.prototype = cls_proto;
        best.label = static_cast<int>(l) + 1;
      }
    }
    result.predictions[q] = best;
  }
  return result;
}

inline double test_error(const std::vector<int>& predicted, const std::vector<int>& truth) {
  if (predicted.size() != truth.size()) throw input_error("prediction/truth length mismatch");
  if (predicted.empty()) throw input_error("empty prediction vector");
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i)
    if (predicted[i] != truth[i]) ++wrong;
  return static_cast<double>(wrong) / static_cast<double>(predicted.size());
}

}  // namespace pvm

#endif  // PVM_CLASSIFIER_HPP_
