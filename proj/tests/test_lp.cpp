// Copyright 2026 The rentfair Authors
//
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

#include "rentfair/lp.hpp"
#include "test_util.hpp"

namespace rentfair {
namespace {

using test::Q;

TEST_SUITE_BEGIN("lp");

TEST_CASE("single bound") {
  LinearProgram lp;
  std::size_t x = lp.add_variable("x");
  lp.sense = LpSense::kMaximize;
  lp.objective = {{x, Q(1)}};
  lp.add_constraint({{x, Q(1)}}, Relation::kLessEq, Q(3));
  LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == Q(3));
  CHECK(sol.point[x] == Q(3));
}

TEST_CASE("infeasible") {
  LinearProgram lp;
  std::size_t x = lp.add_variable("x");
  lp.sense = LpSense::kMaximize;
  lp.objective = {{x, Q(1)}};
  lp.add_constraint({{x, Q(1)}}, Relation::kLessEq, Q(3));
  lp.add_constraint({{x, Q(1)}}, Relation::kGreaterEq, Q(5));
  CHECK(solve_lp(lp).status == LpStatus::kInfeasible);
}

TEST_CASE("unbounded") {
  LinearProgram lp;
  std::size_t x = lp.add_variable("x");
  lp.sense = LpSense::kMaximize;
  lp.objective = {{x, Q(1)}};
  lp.add_constraint({{x, Q(1)}}, Relation::kGreaterEq, Q(5));
  CHECK(solve_lp(lp).status == LpStatus::kUnbounded);
}

TEST_CASE("boundary equalization reduced to one variable") {
  // The 2x2 soft-budget equalization with the second rent eliminated via
  // the fixed total 18: max R with R <= 15 - 2t and R <= 2t - 25.
  LinearProgram lp;
  std::size_t big_r = lp.add_variable("R");
  std::size_t t = lp.add_variable("t");
  lp.sense = LpSense::kMaximize;
  lp.objective = {{big_r, Q(1)}};
  lp.add_constraint({{big_r, Q(1)}, {t, Q(2)}}, Relation::kLessEq, Q(15));
  lp.add_constraint({{big_r, Q(1)}, {t, Q(-2)}}, Relation::kLessEq, Q(-25));
  LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == Q(-5));
  CHECK(sol.point[t] == Q(10));
}

TEST_CASE("free variables can settle negative") {
  LinearProgram lp;
  std::size_t x = lp.add_variable("x");
  lp.sense = LpSense::kMinimize;
  lp.objective = {{x, Q(1)}};
  lp.add_constraint({{x, Q(1)}}, Relation::kGreaterEq, Q(-7, 3));
  LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == Q(-7, 3));
}

TEST_CASE("equalities force exact points") {
  LinearProgram lp;
  std::size_t x = lp.add_variable("x");
  std::size_t y = lp.add_variable("y");
  lp.sense = LpSense::kMaximize;
  lp.objective = {{x, Q(1)}, {y, Q(1)}};
  lp.add_constraint({{x, Q(2)}, {y, Q(1)}}, Relation::kEqual, Q(4));
  lp.add_constraint({{x, Q(1)}, {y, Q(3)}}, Relation::kEqual, Q(7));
  LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.point[x] == Q(1));
  CHECK(sol.point[y] == Q(2));
}

TEST_CASE("redundant equalities do not break the certificate") {
  LinearProgram lp;
  std::size_t x = lp.add_variable("x");
  std::size_t y = lp.add_variable("y");
  lp.sense = LpSense::kMinimize;
  lp.objective = {{x, Q(1)}, {y, Q(2)}};
  lp.add_constraint({{x, Q(1)}, {y, Q(1)}}, Relation::kEqual, Q(3));
  lp.add_constraint({{x, Q(2)}, {y, Q(2)}}, Relation::kEqual, Q(6));
  lp.add_constraint({{x, Q(1)}}, Relation::kGreaterEq, Q(0));
  lp.add_constraint({{y, Q(1)}}, Relation::kGreaterEq, Q(0));
  LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == Q(3));
  CHECK(sol.point[x] == Q(3));
}

TEST_CASE("lex refinement picks a deterministic optimum") {
  // The whole segment x + y = 1, 0 <= x, y is optimal for a constant
  // objective; refinement must settle it.
  auto build = [](LexDirection refine) {
    LinearProgram lp;
    std::size_t x = lp.add_variable("x");
    std::size_t y = lp.add_variable("y");
    lp.sense = LpSense::kMaximize;
    lp.objective = {{x, Q(1)}, {y, Q(1)}};
    lp.add_constraint({{x, Q(1)}, {y, Q(1)}}, Relation::kEqual, Q(1));
    lp.add_constraint({{x, Q(1)}}, Relation::kGreaterEq, Q(0));
    lp.add_constraint({{y, Q(1)}}, Relation::kGreaterEq, Q(0));
    lp.lex_vars = {x, y};
    lp.lex_direction = refine;
    return lp;
  };

  LpSolution lo = solve_lp(build(LexDirection::kMinimize));
  REQUIRE(lo.status == LpStatus::kOptimal);
  CHECK(lo.point[0] == Q(0));
  CHECK(lo.point[1] == Q(1));

  LpSolution hi = solve_lp(build(LexDirection::kMaximize));
  REQUIRE(hi.status == LpStatus::kOptimal);
  CHECK(hi.point[0] == Q(1));
  CHECK(hi.point[1] == Q(0));

  LpSolution again = solve_lp(build(LexDirection::kMinimize));
  CHECK(again.point == lo.point);
}

TEST_CASE("malformed programs are rejected") {
  LinearProgram lp;
  lp.objective = {{3, Q(1)}};
  CHECK_THROWS_AS(solve_lp(lp), std::invalid_argument);
}

TEST_CASE("randomized box programs hit the right corner") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    LinearProgram lp;
    std::size_t dims = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
    std::vector<Rational> lo(dims), hi(dims), coeff(dims);
    lp.sense = rng.uniform(0, 1) == 0 ? LpSense::kMaximize
                                      : LpSense::kMinimize;
    for (std::size_t d = 0; d < dims; ++d) {
      std::size_t v = lp.add_variable("x" + std::to_string(d));
      lo[d] = Q(rng.uniform(-20, 10), rng.uniform(1, 4));
      hi[d] = lo[d] + Q(rng.uniform(0, 25), rng.uniform(1, 4));
      coeff[d] = Q(rng.uniform(-9, 9), rng.uniform(1, 3));
      lp.objective.emplace_back(v, coeff[d]);
      lp.add_constraint({{v, Q(1)}}, Relation::kGreaterEq, lo[d]);
      lp.add_constraint({{v, Q(1)}}, Relation::kLessEq, hi[d]);
    }
    LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::kOptimal);
    Rational expect;
    bool maximize = lp.sense == LpSense::kMaximize;
    for (std::size_t d = 0; d < dims; ++d) {
      bool up = maximize == coeff[d].is_positive() && !coeff[d].is_zero();
      expect += coeff[d] * (up ? hi[d] : lo[d]);
    }
    CHECK(sol.value == expect);
  }
}

TEST_CASE("dump renders exact rationals") {
  LinearProgram lp;
  lp.tag = "demo";
  std::size_t x = lp.add_variable("x");
  lp.sense = LpSense::kMaximize;
  lp.objective = {{x, Q(1, 3)}};
  lp.add_constraint({{x, Q(7, 2)}}, Relation::kLessEq, Q(19, 3), "cap");
  std::string text = lp.dump();
  CHECK(text.find("1/3 x") != std::string::npos);
  CHECK(text.find("cap: 7/2 x <= 19/3;") != std::string::npos);
  CHECK(text.find("demo") != std::string::npos);
}

TEST_SUITE_END();

}  // namespace
}  // namespace rentfair
