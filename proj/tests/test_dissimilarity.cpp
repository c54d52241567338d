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

#include <doctest.h>

#include <cmath>

#include "pvm/pvm.hpp"
#include "test_util.hpp"

using namespace pvm;

TEST_CASE("euclidean matrix: 3-4-5 triangle, identity, hand expansion") {
  const auto d1 = euclidean_matrix({{0, 0}, {3, 4}}, {{0, 0}, {3, 4}});
  CHECK(d1(0, 0) == 0.0);
  CHECK(d1(0, 1) == 5.0);
  CHECK(d1(1, 0) == 5.0);
  CHECK(d1(1, 1) == 0.0);

  const auto d2 = euclidean_matrix({{1}}, {{1}});
  CHECK(d2(0, 0) == 0.0);

  const auto d3 = euclidean_matrix({{0, 0}}, {{1, 1}, {2, 0}});
  CHECK(d3(0, 0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(d3(0, 1) == doctest::Approx(2.0).epsilon(1e-15));

  CHECK_THROWS_AS(euclidean_matrix({{1, 2}}, {{1}}), input_error);
}

TEST_CASE("euclidean matrix is symmetric with zero diagonal when Z = X") {
  Rng rng(3);
  std::vector<std::vector<double>> x(10, std::vector<double>(3));
  for (auto& p : x)
    for (auto& v : p) v = rng.uniform01();
  const auto d = euclidean_matrix(x, x);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(d(i, i) == 0.0);
    for (std::size_t j = 0; j < 10; ++j) CHECK(d(i, j) == d(j, i));
  }
}

TEST_CASE("kernel distance: orthonormal, identical, hand evaluation") {
  Matrix identity(2, 2);
  identity(0, 0) = identity(1, 1) = 1.0;
  const auto d1 = kernel_to_distance(identity);
  CHECK(d1(0, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(d1(0, 0) == 0.0);

  const auto d2 = kernel_to_distance(Matrix(2, 2, 1.0));
  CHECK(d2(0, 1) == 0.0);
  CHECK(d2(1, 0) == 0.0);

  Matrix k(2, 2);
  k(0, 0) = 4.0;
  k(1, 1) = 9.0;
  k(0, 1) = k(1, 0) = 1.0;
  const auto d3 = kernel_to_distance(k);
  CHECK(d3(0, 1) == doctest::Approx(std::sqrt(11.0)).epsilon(1e-15));
}

TEST_CASE("kernel distance rejects asymmetry and negative squared distances") {
  Matrix k(2, 2, 1.0);
  k(0, 1) = 1.5;
  CHECK_THROWS_AS(kernel_to_distance(k), input_error);

  Matrix neg(2, 2);
  neg(0, 0) = neg(1, 1) = 1.0;
  neg(0, 1) = neg(1, 0) = 2.0;  // K_ii + K_jj - 2K_ij = -2
  CHECK_THROWS_AS(kernel_to_distance(neg), input_error);
}

TEST_CASE("kernel distance squared reproduces K_ii + K_jj - 2K_ij") {
  Rng rng(5);
  // PSD kernel from random Gram matrix.
  const std::size_t k = 6, p = 4;
  std::vector<std::vector<double>> v(k, std::vector<double>(p));
  for (auto& row : v)
    for (auto& x : row) x = rng.uniform01() - 0.5;
  Matrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < p; ++c) s += v[i][c] * v[j][c];
      gram(i, j) = s;
    }
  const auto d = kernel_to_distance(gram);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const double expected = gram(i, i) + gram(j, j) - 2.0 * gram(i, j);
      CHECK(d(i, j) * d(i, j) == doctest::Approx(std::max(0.0, expected)).epsilon(1e-9));
    }
}

TEST_CASE("rank transform: distinct distances, ties, floor(eps)-1 ball size") {
  Matrix col(3, 1);
  col(0, 0) = 0.1;
  col(1, 0) = 0.5;
  col(2, 0) = 0.9;
  const auto r1 = rank_transform(col);
  CHECK(r1(0, 0) == 1.0);
  CHECK(r1(1, 0) == 2.0);
  CHECK(r1(2, 0) == 3.0);

  Matrix tied(3, 1);
  tied(0, 0) = 0.2;
  tied(1, 0) = 0.2;
  tied(2, 0) = 0.7;
  const auto r2 = rank_transform(tied);
  CHECK(r2(0, 0) == 2.0);
  CHECK(r2(1, 0) == 2.0);
  CHECK(r2(2, 0) == 3.0);

  // With distinct distances, a strict ball of integer radius eps on the
  // rank scale holds exactly floor(eps)-1 nearest training points.
  Rng rng(9);
  Matrix d(8, 3);
  for (auto& v : d.data()) v = rng.uniform01();
  const auto ranks = rank_transform(d);
  for (double eps = 2.0; eps <= 8.0; eps += 1.0) {
    for (std::size_t j = 0; j < 3; ++j) {
      int inside = 0;
      for (std::size_t i = 0; i < 8; ++i)
        if (ranks(i, j) < eps) ++inside;
      CHECK(inside == static_cast<int>(eps) - 1);
    }
  }
}

TEST_CASE("rank transform depends only on column order") {
  Rng rng(21);
  Matrix d(12, 4);
  for (auto& v : d.data()) v = rng.uniform01();
  Matrix warped = d;
  for (auto& v : warped.data()) v = std::exp(3.0 * v) + 1.0;  // strictly increasing
  CHECK(rank_transform(d) == rank_transform(warped));
}

TEST_CASE("rank transform for queries counts training points at least as close") {
  Matrix train(3, 1);
  train(0, 0) = 0.1;
  train(1, 0) = 0.5;
  train(2, 0) = 0.9;
  Matrix query(2, 1);
  query(0, 0) = 0.05;  // closer than everything
  query(1, 0) = 0.5;   // ties the second training point
  const auto r = rank_transform_queries(train, query);
  CHECK(r(0, 0) == 0.0);
  CHECK(r(1, 0) == 2.0);
}

TEST_CASE("epsilon grid: extreme quantiles, interpolation, single point") {
  Matrix d(1, 5);
  for (std::size_t j = 0; j < 5; ++j) d(0, j) = static_cast<double>(j + 1);

  const auto g1 = epsilon_grid(d, 2, 0.0, 1.0);
  CHECK(g1 == std::vector<double>{1.0, 5.0});

  const auto g2 = epsilon_grid(d, 3, 0.0, 0.5);
  REQUIRE(g2.size() == 3);
  CHECK(g2[0] == 1.0);
  CHECK(g2[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(g2[2] == doctest::Approx(3.0).epsilon(1e-12));

  const auto g3 = epsilon_grid(d, 1, 0.0, 1.0);
  CHECK(g3 == std::vector<double>{1.0});

  CHECK_THROWS_AS(epsilon_grid(Matrix(2, 2, 0.0), 3, 0.0, 1.0), input_error);
}

TEST_CASE("epsilon grid ignores zero self-distances and is strictly ascending") {
  Rng rng(33);
  std::vector<std::vector<double>> x(9, std::vector<double>(2));
  for (auto& p : x)
    for (auto& v : p) v = rng.uniform01();
  const auto d = euclidean_matrix(x, x);
  const auto grid = epsilon_grid(d, 7, 0.0, 0.5);
  REQUIRE(!grid.empty());
  CHECK(grid.front() > 0.0);
  for (std::size_t k = 1; k < grid.size(); ++k) CHECK(grid[k] > grid[k - 1]);
  // The low end of the sweep is the minimum positive interpoint distance.
  double min_pos = 1e300;
  for (double v : d.data())
    if (v > 0.0) min_pos = std::min(min_pos, v);
  CHECK(grid.front() == min_pos);
}
