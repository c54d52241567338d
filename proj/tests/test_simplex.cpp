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

#include <sstream>

#include "pvm/pvm.hpp"
#include "test_util.hpp"

using namespace pvm;
using pvm_test::Instance;

namespace {

LpProblem class_lp_as_problem(const ClassLp& lp) {
  // Mirror of the solver's construction, for the vertex-enumeration oracle;
  // upper bounds are always included here.
  const std::size_t m = lp.cost.size();
  const std::size_t k = lp.members.size();
  LpProblem p;
  p.num_vars = m + k;
  p.objective.assign(m + k, 1.0);
  for (std::size_t j = 0; j < m; ++j) p.objective[j] = lp.cost[j];
  for (std::size_t r = 0; r < k; ++r) {
    LpProblem::Row row;
    row.coeffs.assign(m + k, 0.0);
    for (std::size_t j = 0; j < m; ++j)
      if (lp.inc->is_covered(static_cast<std::size_t>(lp.members[r]), j)) row.coeffs[j] = 1.0;
    row.coeffs[m + r] = 1.0;
    row.op = '>';
    row.rhs = 1.0;
    p.rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < m; ++j) {
    LpProblem::Row row;
    row.coeffs.assign(m + k, 0.0);
    row.coeffs[j] = 1.0;
    row.op = '<';
    row.rhs = 1.0;
    p.rows.push_back(std::move(row));
  }
  return p;
}

}  // namespace

TEST_CASE("covering is chosen when cheaper than the unit penalty") {
  Matrix d(1, 1, 0.1);
  const std::vector<int> labels{1};
  const auto inc = build_incidence(d, labels, 1, 1.0);
  const auto lp = build_class_lp(inc, labels, 0.1, 0);
  const auto sol = solve_class_lp(lp);
  CHECK(sol.alpha[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(sol.xi[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(sol.objective == doctest::Approx(0.1).epsilon(1e-9));
}

TEST_CASE("the unit penalty wins over an expensive cover") {
  // Two classes; the candidate covers the single class-1 point and one
  // class-2 point, so at lambda = 1 its class-1 cost is 2.
  Matrix d(2, 1, 0.1);
  const std::vector<int> labels{1, 2};
  const auto inc = build_incidence(d, labels, 2, 1.0);
  const auto lp = build_class_lp(inc, labels, 1.0, 0);
  REQUIRE(lp.cost[0] == 2.0);
  const auto sol = solve_class_lp(lp);
  CHECK(sol.alpha[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(sol.xi[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(sol.objective == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("pairwise cover pattern has the classic fractional optimum") {
  // 3 points, 3 candidates, each point covered by exactly two candidates.
  Matrix d(3, 3, 10.0);
  d(0, 0) = d(0, 1) = 0.1;
  d(1, 1) = d(1, 2) = 0.1;
  d(2, 0) = d(2, 2) = 0.1;
  const std::vector<int> labels{1, 1, 1};
  const auto inc = build_incidence(d, labels, 1, 1.0);
  const auto lp = build_class_lp(inc, labels, 1.0, 0);
  const auto sol = solve_class_lp(lp);
  CHECK(sol.objective == doctest::Approx(1.5).epsilon(1e-9));
  for (int j = 0; j < 3; ++j) CHECK(sol.alpha[static_cast<std::size_t>(j)] ==
                                    doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("single-class LP equals the joint relaxation") {
  Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    Instance inst = pvm_test::random_instance(rng, 8, 5, 1);
    inst.num_classes = 1;
    for (auto& l : inst.labels) l = 1;
    const auto inc = pvm_test::incidence_of(inst);
    const auto lps = solve_all_class_lps(inc, inst.labels, inst.lambda);
    CHECK(joint_lp_optimum(lps) ==
          doctest::Approx(pvm_test::joint_relaxed_lp_optimum(inst)).epsilon(1e-7));
  }
}

TEST_CASE("per-class LP sum equals the directly assembled joint LP") {
  Rng rng(67);
  for (int t = 0; t < 20; ++t) {
    const Instance inst = pvm_test::random_instance(rng, 8, 5, 3);
    const auto inc = pvm_test::incidence_of(inst);
    const auto lps = solve_all_class_lps(inc, inst.labels, inst.lambda);
    const double joint = pvm_test::joint_relaxed_lp_optimum(inst);
    CHECK(joint_lp_optimum(lps) == doctest::Approx(joint).epsilon(1e-7));
  }
}

TEST_CASE("a wrong-class-only candidate gets alpha zero at lambda 0") {
  Matrix d(2, 2, 10.0);
  d(0, 0) = 0.1;  // candidate 0 covers the class-1 point
  d(1, 1) = 0.1;  // candidate 1 covers only the class-2 point
  const std::vector<int> labels{1, 2};
  const auto inc = build_incidence(d, labels, 2, 1.0);
  const auto lp = build_class_lp(inc, labels, 0.0, 0);
  CHECK(lp.cost[1] == 1.0);
  const auto sol = solve_class_lp(lp);
  CHECK(sol.alpha[1] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(sol.alpha[0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("simplex matches vertex enumeration on random class LPs") {
  Rng rng(71);
  int done = 0;
  while (done < 50) {
    const Instance inst = pvm_test::random_instance(rng, 5, 4, 2);
    const auto inc = pvm_test::incidence_of(inst);
    const auto lp = build_class_lp(inc, inst.labels, inst.lambda, 0);
    if (lp.cost.size() + lp.members.size() > 6) continue;
    const auto sol = solve_class_lp(lp);
    const double vertex = pvm_test::vertex_enumeration_optimum(class_lp_as_problem(lp));
    CHECK(sol.objective == doctest::Approx(vertex).epsilon(1e-8));
    ++done;
  }
}

TEST_CASE("simplex reports infeasibility and unboundedness") {
  LpProblem infeasible;
  infeasible.num_vars = 1;
  infeasible.objective = {1.0};
  infeasible.rows.push_back({{1.0}, '>', 2.0});
  infeasible.rows.push_back({{1.0}, '<', 1.0});
  CHECK(solve_lp(infeasible).status == LpResult::Status::infeasible);

  LpProblem unbounded;
  unbounded.num_vars = 1;
  unbounded.objective = {-1.0};
  unbounded.rows.push_back({{1.0}, '>', 0.0});
  CHECK(solve_lp(unbounded).status == LpResult::Status::unbounded);
}

TEST_CASE("LP text export lists objective, covers, and bounds") {
  Matrix d(1, 2, 0.1);
  const std::vector<int> labels{1};
  const auto inc = build_incidence(d, labels, 1, 1.0);
  const auto lp = build_class_lp(inc, labels, 0.5, 0);
  std::ostringstream os;
  write_lp_text(os, lp);
  const std::string text = os.str();
  CHECK(text.find("min:") != std::string::npos);
  CHECK(text.find("cover_0:") != std::string::npos);
  CHECK(text.find(">= 1") != std::string::npos);
  CHECK(text.find("a1 <= 1") != std::string::npos);
}
