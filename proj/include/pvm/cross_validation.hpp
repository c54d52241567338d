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

#ifndef PVM_CROSS_VALIDATION_HPP_
#define PVM_CROSS_VALIDATION_HPP_

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "pvm/classifier.hpp"
#include "pvm/core.hpp"
#include "pvm/coverage.hpp"
#include "pvm/data.hpp"
#include "pvm/solver.hpp"

namespace pvm {

struct CvPoint {
  double epsilon = 0.0;
  double mean_error = 0.0;
  double std_error = 0.0;        // std of fold errors / sqrt(folds)
  double mean_prototypes = 0.0;  // across folds
};

struct CvResult {
  std::vector<CvPoint> points;
  std::size_t chosen_index = 0;
  double chosen_epsilon = 0.0;
};

/// Stratified fold assignment: a deterministic function of (seed, labels,
/// folds). Each class is shuffled with the seeded generator and dealt
/// round-robin, so per-class fold sizes differ by at most one.
inline std::vector<int> stratified_folds(const std::vector<int>& labels, int num_classes,
                                         int folds, std::uint64_t seed) {
  if (folds < 2) throw input_error("folds must be >= 2");
  Rng rng(seed);
  std::vector<int> fold_of(labels.size(), 0);
  // The round-robin offset carries over between classes so small classes
  // do not pile into the low-numbered folds (and folds = n degenerates to
  // leave-one-out).
  std::size_t offset = 0;
  for (int l = 1; l <= num_classes; ++l) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) members.push_back(i);
    for (std::size_t k = members.size(); k > 1; --k)
      std::swap(members[k - 1], members[rng.below(k)]);
    for (std::size_t r = 0; r < members.size(); ++r)
      fold_of[members[r]] = static_cast<int>((offset + r) % static_cast<std::size_t>(folds));
    offset = (offset + members.size()) % static_cast<std::size_t>(folds);
  }
  return fold_of;
}

/// One-standard-error rule: among grid points whose mean error is within
/// one SE of the best, pick the sparsest model; ties go to the larger
/// epsilon. Order-invariant in the grid.
inline std::size_t one_se_select(const std::vector<CvPoint>& points) {
  if (points.empty()) throw input_error("empty CV result");
  double best_err = points.front().mean_error;
  for (const auto& p : points) best_err = std::min(best_err, p.mean_error);
  double se_at_best = 0.0;
  bool first = true;
  for (const auto& p : points)
    if (p.mean_error == best_err) {
      if (first || p.std_error < se_at_best) se_at_best = p.std_error;
      first = false;
    }
  const double threshold = best_err + se_at_best;
  std::size_t chosen = points.size();
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].mean_error > threshold) continue;
    if (chosen == points.size() ||
        points[k].mean_prototypes < points[chosen].mean_prototypes ||
        (points[k].mean_prototypes == points[chosen].mean_prototypes &&
         points[k].epsilon > points[chosen].epsilon))
      chosen = k;
  }
  return chosen;
}

/// K-fold cross-validation over an epsilon grid with Z = X. For each fold
/// the candidate set is restricted to the training part (held-out points
/// are never potential prototypes). D must be the square training
/// dissimilarity matrix.
inline CvResult kfold_cv(const Matrix& d, const std::vector<int>& labels, int num_classes,
                         const std::vector<double>& grid, const PvmConfig& config,
                         int folds, std::uint64_t seed) {
  if (grid.empty()) throw input_error("empty epsilon grid");
  if (d.rows() != d.cols() || d.rows() != labels.size())
    throw input_error("cross-validation needs a square n x n dissimilarity matrix");
  const std::vector<int> fold_of = stratified_folds(labels, num_classes, folds, seed);

  CvResult result;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    std::vector<double> fold_err;
    std::vector<double> fold_protos;
    for (int f = 0; f < folds; ++f) {
      std::vector<std::size_t> train, test;
      for (std::size_t i = 0; i < labels.size(); ++i)
        (fold_of[i] == f ? test : train).push_back(i);
      if (test.empty()) continue;
      Matrix d_train(train.size(), train.size());
      std::vector<int> train_labels(train.size());
      for (std::size_t a = 0; a < train.size(); ++a) {
        train_labels[a] = labels[train[a]];
        for (std::size_t b = 0; b < train.size(); ++b)
          d_train(a, b) = d(train[a], train[b]);
      }
      PvmConfig fold_cfg = config;
      fold_cfg.epsilon = grid[g];
      // Deterministic per-(grid point, fold) substream.
      fold_cfg.seed = seed ^ (0x9e3779b97f4a7c15ull * (g * static_cast<std::size_t>(folds) +
                                                       static_cast<std::size_t>(f) + 1));
      const CoverageIncidence inc =
          build_incidence(d_train, train_labels, num_classes, grid[g]);
      const FitResult fitted = fit(inc, train_labels, fold_cfg);
      fold_protos.push_back(static_cast<double>(fitted.solution.total_prototypes()));
      if (fitted.solution.total_prototypes() == 0) {
        // No usable model; every held-out point counts as an error.
        fold_err.push_back(1.0);
        continue;
      }
      Matrix d_test(test.size(), train.size());
      std::vector<int> truth(test.size());
      for (std::size_t a = 0; a < test.size(); ++a) {
        truth[a] = labels[test[a]];
        for (std::size_t b = 0; b < train.size(); ++b)
          d_test(a, b) = d(test[a], train[b]);
      }
      const ClassificationResult cr = classify(d_test, fitted.solution);
      fold_err.push_back(test_error(cr.labels(), truth));
    }
    CvPoint pt;
    pt.epsilon = grid[g];
    const auto k = static_cast<double>(fold_err.size());
    pt.mean_error = std::accumulate(fold_err.begin(), fold_err.end(), 0.0) / k;
    double ss = 0.0;
    for (double e : fold_err) ss += (e - pt.mean_error) * (e - pt.mean_error);
    const double sd = fold_err.size() > 1 ? std::sqrt(ss / (k - 1.0)) : 0.0;
    pt.std_error = sd / std::sqrt(k);
    pt.mean_prototypes =
        std::accumulate(fold_protos.begin(), fold_protos.end(), 0.0) / k;
    result.points.push_back(pt);
  }
  result.chosen_index = one_se_select(result.points);
  result.chosen_epsilon = result.points[result.chosen_index].epsilon;
  return result;
}

}  // namespace pvm

#endif  // PVM_CROSS_VALIDATION_HPP_
