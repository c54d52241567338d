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

#ifndef PVM_DATA_HPP_
#define PVM_DATA_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pvm/core.hpp"

namespace pvm {

/// Labeled training data. Labels are 1-based, in {1..num_classes}.
/// Points are optional: when dissimilarities are precomputed the feature
/// vectors are never needed.
struct Dataset {
  std::optional<std::vector<std::vector<double>>> points;
  std::vector<int> labels;
  int num_classes = 0;

  std::size_t size() const { return labels.size(); }

  void validate() const {
    if (labels.empty()) throw input_error("dataset has no points");
    if (num_classes < 1) throw input_error("num_classes must be positive");
    std::vector<bool> seen(static_cast<std::size_t>(num_classes), false);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] < 1 || labels[i] > num_classes)
        throw input_error("label " + std::to_string(labels[i]) + " at row " +
                          std::to_string(i) + " out of range 1.." +
                          std::to_string(num_classes));
      seen[static_cast<std::size_t>(labels[i] - 1)] = true;
    }
    for (int l = 0; l < num_classes; ++l)
      if (!seen[static_cast<std::size_t>(l)])
        throw input_error("class " + std::to_string(l + 1) + " empty");
    if (points) {
      if (points->size() != labels.size())
        throw input_error("points/labels length mismatch");
      const std::size_t p = points->front().size();
      if (p < 1) throw input_error("points must have dimension >= 1");
      for (const auto& x : *points)
        if (x.size() != p) throw input_error("points have unequal dimensions");
    }
  }
};

/// Candidate prototype set Z. Defaults to Z = X when no points are given
/// and the dissimilarity matrix is square.
struct CandidateSet {
  std::optional<std::vector<std::vector<double>>> points;
  bool same_as_training = false;
  std::size_t count = 0;

  std::size_t size() const { return points ? points->size() : count; }

  void validate() const {
    if (size() < 1) throw input_error("candidate set empty");
  }
};

enum class Algorithm { greedy, lp_round };

/// Solver configuration. lambda < 0 means "use the default 1/n".
struct PvmConfig {
  double epsilon = 0.0;
  double lambda = -1.0;
  Algorithm algorithm = Algorithm::greedy;
  int rounding_iterations = 200;
  std::uint64_t seed = 0;

  double effective_lambda(std::size_t n) const {
    return lambda < 0.0 ? 1.0 / static_cast<double>(n) : lambda;
  }

  void validate() const {
    if (epsilon <= 0.0) throw input_error("epsilon must be positive");
    if (rounding_iterations < 1) throw input_error("rounding iterations must be >= 1");
  }
};

/// Objective value split into its three terms. total is always rebuilt
/// from the parts so the equality holds exactly.
struct ObjectiveBreakdown {
  long long xi_total = 0;
  long long eta_total = 0;
  long long proto_count = 0;
  double lambda = 0.0;
  double total = 0.0;

  static ObjectiveBreakdown make(long long xi, long long eta, long long count,
                                 double lambda) {
    ObjectiveBreakdown b;
    b.xi_total = xi;
    b.eta_total = eta;
    b.proto_count = count;
    b.lambda = lambda;
    b.total = static_cast<double>(xi + eta) + lambda * static_cast<double>(count);
    return b;
  }

  bool operator==(const ObjectiveBreakdown&) const = default;
};

/// Per-class prototype index sets P_1..P_L over Z, in selection order.
struct PrototypeSolution {
  std::vector<std::vector<int>> sets;
  ObjectiveBreakdown objective;

  long long total_prototypes() const {
    long long c = 0;
    for (const auto& s : sets) c += static_cast<long long>(s.size());
    return c;
  }

  /// Equivalent binary indicators, m x L.
  std::vector<std::vector<std::uint8_t>> alpha(std::size_t m) const {
    std::vector<std::vector<std::uint8_t>> a(m, std::vector<std::uint8_t>(sets.size(), 0));
    for (std::size_t l = 0; l < sets.size(); ++l)
      for (int j : sets[l]) a[static_cast<std::size_t>(j)][l] = 1;
    return a;
  }
};

/// Validated problem instance shared by all solvers.
struct Problem {
  Dataset data;
  CandidateSet candidates;
  Matrix dissim;  // n x m, D[i][j] = d(x_i, z_j)
};

inline Problem validate_inputs(Dataset data, CandidateSet candidates, Matrix dissim) {
  data.validate();
  candidates.validate();
  if (dissim.rows() != data.size())
    throw input_error("dissimilarity rows (" + std::to_string(dissim.rows()) +
                      ") != number of training points (" + std::to_string(data.size()) + ")");
  if (dissim.cols() != candidates.size())
    throw input_error("dissimilarity cols (" + std::to_string(dissim.cols()) +
                      ") != number of candidates (" + std::to_string(candidates.size()) + ")");
  if (candidates.same_as_training && candidates.size() != data.size())
    throw input_error("Z = X declared but candidate count differs from n");
  for (std::size_t i = 0; i < dissim.rows(); ++i)
    for (std::size_t j = 0; j < dissim.cols(); ++j) {
      const double d = dissim(i, j);
      if (!std::isfinite(d))
        throw input_error("non-finite dissimilarity at (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
      if (d < 0.0)
        throw input_error("negative dissimilarity at (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
    }
  return Problem{std::move(data), std::move(candidates), std::move(dissim)};
}

}  // namespace pvm

#endif  // PVM_DATA_HPP_
