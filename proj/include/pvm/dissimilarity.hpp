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

#ifndef PVM_DISSIMILARITY_HPP_
#define PVM_DISSIMILARITY_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "pvm/core.hpp"

namespace pvm {

/// Pairwise Euclidean distances, rows = X, columns = Z.
inline Matrix euclidean_matrix(const std::vector<std::vector<double>>& x,
                               const std::vector<std::vector<double>>& z) {
  if (x.empty() || z.empty()) throw input_error("empty point set");
  const std::size_t p = x.front().size();
  for (const auto& v : x)
    if (v.size() != p) throw input_error("dimension mismatch in X");
  for (const auto& v : z)
    if (v.size() != p) throw input_error("dimension mismatch between X and Z");
  Matrix d(x.size(), z.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < p; ++k) {
        const double diff = x[i][k] - z[j][k];
        s += diff * diff;
      }
      d(i, j) = std::sqrt(s);
    }
  return d;
}

/// Distance induced by a kernel: D[i][j] = sqrt(K_ii + K_jj - 2 K_ij),
/// restricted to the given row/column index sets of the kernel matrix.
inline Matrix kernel_to_distance(const Matrix& k, const std::vector<std::size_t>& row_idx,
                                 const std::vector<std::size_t>& col_idx) {
  if (k.rows() != k.cols()) throw input_error("kernel matrix must be square");
  double scale = 0.0;
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) scale = std::max(scale, std::abs(k(i, j)));
  const double tol = 1e-9 * std::max(scale, 1.0);
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = i + 1; j < k.cols(); ++j)
      if (std::abs(k(i, j) - k(j, i)) > tol)
        throw input_error("kernel matrix asymmetric at (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
  Matrix d(row_idx.size(), col_idx.size());
  for (std::size_t a = 0; a < row_idx.size(); ++a)
    for (std::size_t b = 0; b < col_idx.size(); ++b) {
      const std::size_t i = row_idx[a], j = col_idx[b];
      if (i >= k.rows() || j >= k.rows()) throw input_error("kernel index out of range");
      const double sq = k(i, i) + k(j, j) - 2.0 * k(i, j);
      if (sq < -tol)
        throw input_error("kernel induces negative squared distance at (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
      d(a, b) = std::sqrt(std::max(0.0, sq));
    }
  return d;
}

/// Kernel distance over the full square matrix.
inline Matrix kernel_to_distance(const Matrix& k) {
  std::vector<std::size_t> all(k.rows());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return kernel_to_distance(k, all, all);
}

/// Rank dissimilarity over the training rows: entry (i, j) becomes the
/// number of training points at least as close to z_j, i.e.
/// |{i' : D[i'][j] <= D[i][j]}|. Ties in a column get equal rank.
inline Matrix rank_transform(const Matrix& d_train) {
  Matrix out(d_train.rows(), d_train.cols());
  std::vector<double> col(d_train.rows());
  for (std::size_t j = 0; j < d_train.cols(); ++j) {
    for (std::size_t i = 0; i < d_train.rows(); ++i) col[i] = d_train(i, j);
    std::vector<double> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < d_train.rows(); ++i) {
      const auto ub = std::upper_bound(sorted.begin(), sorted.end(), col[i]);
      out(i, j) = static_cast<double>(ub - sorted.begin());
    }
  }
  return out;
}

/// Rank transform for query rows, ranked against the training columns.
inline Matrix rank_transform_queries(const Matrix& d_train, const Matrix& d_query) {
  if (d_train.cols() != d_query.cols())
    throw input_error("query and training matrices must share candidate columns");
  Matrix out(d_query.rows(), d_query.cols());
  std::vector<double> sorted(d_train.rows());
  for (std::size_t j = 0; j < d_train.cols(); ++j) {
    for (std::size_t i = 0; i < d_train.rows(); ++i) sorted[i] = d_train(i, j);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t q = 0; q < d_query.rows(); ++q) {
      const auto ub = std::upper_bound(sorted.begin(), sorted.end(), d_query(q, j));
      out(q, j) = static_cast<double>(ub - sorted.begin());
    }
  }
  return out;
}

/// Equally spaced quantiles (linear interpolation between order statistics)
/// of the positive entries of D, from quantile lo_q to hi_q. Duplicate
/// values are collapsed, so the grid may be shorter than `count`.
inline std::vector<double> epsilon_grid(const Matrix& d, std::size_t count,
                                        double lo_q, double hi_q) {
  if (count < 1) throw input_error("grid count must be >= 1");
  if (!(lo_q >= 0.0 && hi_q <= 1.0 && (lo_q < hi_q || count == 1)))
    throw input_error("quantile range must satisfy 0 <= lo < hi <= 1");
  std::vector<double> pos;
  pos.reserve(d.data().size());
  for (double v : d.data())
    if (v > 0.0) pos.push_back(v);
  if (pos.empty()) throw input_error("no positive dissimilarities");
  std::sort(pos.begin(), pos.end());
  const auto quantile = [&](double q) {
    const double h = q * static_cast<double>(pos.size() - 1);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= pos.size()) return pos.back();
    return pos[lo] + (h - static_cast<double>(lo)) * (pos[lo + 1] - pos[lo]);
  };
  std::vector<double> grid;
  for (std::size_t k = 0; k < count; ++k) {
    const double q = count == 1
                         ? lo_q
                         : lo_q + (hi_q - lo_q) * static_cast<double>(k) /
                                      static_cast<double>(count - 1);
    const double v = quantile(q);
    if (grid.empty() || v > grid.back()) grid.push_back(v);
  }
  return grid;
}

}  // namespace pvm

#endif  // PVM_DISSIMILARITY_HPP_
