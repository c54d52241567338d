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

#include "pvm/pvm.hpp"
#include "test_util.hpp"

using namespace pvm;
using pvm_test::Instance;

TEST_CASE("incidence thresholds are strict") {
  Matrix d(2, 2);
  d(0, 0) = 0.0;
  d(0, 1) = 2.0;
  d(1, 0) = 3.0;
  d(1, 1) = 1.0;
  const std::vector<int> labels{1, 2};

  const auto tiny = build_incidence(d, labels, 2, 1e-12);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(tiny.is_covered(i, j) == (i == 0 && j == 0));  // only the zero entry

  const auto huge = build_incidence(d, labels, 2, 100.0);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(huge.is_covered(i, j));

  // 2 < 2 is false: the point at exactly epsilon stays outside.
  const auto at2 = build_incidence(d, labels, 2, 2.0);
  CHECK(at2.is_covered(0, 0));
  CHECK(!at2.is_covered(0, 1));
  CHECK(!at2.is_covered(1, 0));
  CHECK(at2.is_covered(1, 1));
}

TEST_CASE("class count caches are consistent with the ball contents") {
  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    const Instance inst = pvm_test::random_instance(rng);
    const auto inc = pvm_test::incidence_of(inst);
    for (std::size_t j = 0; j < inc.m; ++j) {
      int total = 0;
      for (int l = 0; l < inc.num_classes; ++l) total += inc.count(j, l);
      CHECK(total == inc.ball_size(j));
      for (int l = 0; l < inc.num_classes; ++l) {
        int direct = 0;
        for (std::size_t i = 0; i < inc.n; ++i)
          if (inst.labels[i] == l + 1 && inst.dissim(i, j) < inst.epsilon) ++direct;
        CHECK(direct == inc.count(j, l));
      }
    }
  }
}

TEST_CASE("prototype cost is lambda plus wrong-class coverage") {
  // labels [1,1,2]; candidate 0 covers all three points; candidate 1 covers nothing.
  Matrix d(3, 2, 10.0);
  d(0, 0) = 0.5;
  d(1, 0) = 0.5;
  d(2, 0) = 0.5;
  const std::vector<int> labels{1, 1, 2};
  const auto inc = build_incidence(d, labels, 2, 1.0);
  CHECK(prototype_cost(inc, 0.25, 1, 0) == 0.25);          // empty ball
  CHECK(prototype_cost(inc, 0.25, 0, 0) == 1.25);          // point 2 is wrong for class 1
  CHECK(prototype_cost(inc, 0.25, 0, 1) == 2.25);          // points 0, 1 are wrong for class 2
  CHECK_THROWS_AS(prototype_cost(inc, 0.25, 5, 0), input_error);
}

TEST_CASE("objective of the empty solution is n") {
  Rng rng(19);
  const Instance inst = pvm_test::random_instance(rng);
  const auto inc = pvm_test::incidence_of(inst);
  const auto obj = evaluate_objective(
      inc, inst.labels, std::vector<std::vector<int>>(static_cast<std::size_t>(inst.num_classes)),
      inst.lambda);
  CHECK(obj.xi_total == static_cast<long long>(inc.n));
  CHECK(obj.eta_total == 0);
  CHECK(obj.total == static_cast<double>(inc.n));
}

TEST_CASE("self-cover regime: all own points selected gives total = lambda * n") {
  // Z = X, epsilon below the minimum positive distance: each ball is just
  // its own center.
  const std::vector<std::vector<double>> x{{0.0}, {1.0}, {2.5}, {4.0}};
  const std::vector<int> labels{1, 1, 2, 2};
  const auto d = euclidean_matrix(x, x);
  const double lambda = 1.0 / 4.0;
  const auto inc = build_incidence(d, labels, 2, 0.9);
  const std::vector<std::vector<int>> sets{{0, 1}, {2, 3}};
  const auto obj = evaluate_objective(inc, labels, sets, lambda);
  CHECK(obj.xi_total == 0);
  CHECK(obj.eta_total == 0);
  CHECK(obj.proto_count == 4);
  CHECK(obj.total == 1.0);
}

TEST_CASE("hand-checked three point objective") {
  // covers = [[T,T,F],[T,T,F],[F,T,T]] by construction.
  Matrix d(3, 3, 10.0);
  d(0, 0) = d(0, 1) = 0.1;
  d(1, 0) = d(1, 1) = 0.1;
  d(2, 1) = d(2, 2) = 0.1;
  const std::vector<int> labels{1, 1, 2};
  const auto inc = build_incidence(d, labels, 2, 1.0);
  const double lambda = 0.125;
  const auto obj = evaluate_objective(inc, labels, {{0}, {2}}, lambda);
  CHECK(obj.xi_total == 0);
  CHECK(obj.eta_total == 0);
  CHECK(obj.total == 2.0 * lambda);
}

TEST_CASE("objective decomposes into per-class prize-collecting covers") {
  Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    const Instance inst = pvm_test::random_instance(rng);
    const auto inc = pvm_test::incidence_of(inst);
    // Random assignment.
    std::vector<std::vector<int>> sets(static_cast<std::size_t>(inst.num_classes));
    for (std::size_t l = 0; l < sets.size(); ++l)
      for (std::size_t j = 0; j < inc.m; ++j)
        if (rng.uniform01() < 0.4) sets[l].push_back(static_cast<int>(j));
    const auto obj = evaluate_objective(inc, inst.labels, sets, inst.lambda);

    // Per-class: sum of C_l(j) over the set plus uncovered class members.
    double decomposed = 0.0;
    for (std::size_t l = 0; l < sets.size(); ++l) {
      for (int j : sets[l])
        decomposed += prototype_cost(inc, inst.lambda, static_cast<std::size_t>(j),
                                     static_cast<int>(l));
      for (std::size_t i = 0; i < inc.n; ++i) {
        if (inst.labels[i] != static_cast<int>(l) + 1) continue;
        bool covered = false;
        for (int j : sets[l])
          if (inc.is_covered(i, static_cast<std::size_t>(j))) covered = true;
        if (!covered) decomposed += 1.0;
      }
    }
    CHECK(obj.total == doctest::Approx(decomposed).epsilon(1e-12));
    // And against the from-scratch oracle, exactly on the integer parts.
    long long xi = 0, eta = 0;
    pvm_test::oracle_objective(inst, sets, &xi, &eta);
    CHECK(obj.xi_total == xi);
    CHECK(obj.eta_total == eta);
  }
}

TEST_CASE("adding a prototype never hurts xi and never helps eta or count") {
  Rng rng(29);
  for (int t = 0; t < 40; ++t) {
    const Instance inst = pvm_test::random_instance(rng);
    const auto inc = pvm_test::incidence_of(inst);
    std::vector<std::vector<int>> sets(static_cast<std::size_t>(inst.num_classes));
    for (std::size_t l = 0; l < sets.size(); ++l)
      for (std::size_t j = 0; j < inc.m; ++j)
        if (rng.uniform01() < 0.3) sets[l].push_back(static_cast<int>(j));
    const auto before = evaluate_objective(inc, inst.labels, sets, inst.lambda);
    const auto l = rng.below(sets.size());
    const auto j = static_cast<int>(rng.below(inc.m));
    bool already = false;
    for (int v : sets[l]) already |= (v == j);
    if (already) continue;
    sets[l].push_back(j);
    const auto after = evaluate_objective(inc, inst.labels, sets, inst.lambda);
    CHECK(after.xi_total <= before.xi_total);
    CHECK(after.eta_total >= before.eta_total);
    CHECK(after.proto_count == before.proto_count + 1);
  }
}

TEST_CASE("with every candidate selected, xi counts points outside all balls") {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const Instance inst = pvm_test::random_instance(rng);
    const auto inc = pvm_test::incidence_of(inst);
    std::vector<std::vector<int>> sets(static_cast<std::size_t>(inst.num_classes));
    for (auto& s : sets)
      for (std::size_t j = 0; j < inc.m; ++j) s.push_back(static_cast<int>(j));
    const auto obj = evaluate_objective(inc, inst.labels, sets, inst.lambda);
    long long expected = 0;
    for (std::size_t i = 0; i < inc.n; ++i) {
      bool any = false;
      for (std::size_t j = 0; j < inc.m; ++j) any |= inc.is_covered(i, j);
      if (!any) ++expected;
    }
    CHECK(obj.xi_total == expected);
  }
}

TEST_CASE("evaluate_objective rejects out-of-range prototype indices") {
  Matrix d(2, 2, 0.1);
  const std::vector<int> labels{1, 2};
  const auto inc = build_incidence(d, labels, 2, 1.0);
  CHECK_THROWS_AS(evaluate_objective(inc, labels, {{5}, {}}, 0.1), input_error);
}
