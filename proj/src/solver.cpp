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

#include "rentfair/solver.hpp"

#include <string>

#include "rentfair/lp.hpp"
#include "rentfair/matching.hpp"
#include "rentfair/programs.hpp"

namespace rentfair {

unsigned long long iteration_bound(std::size_t n, std::size_t k) {
  unsigned long long bound = static_cast<unsigned long long>(n) * n;
  for (std::size_t j = 1; j < k; ++j) bound *= n + 1;
  return bound + 2;
}

namespace {

void require_valid(const Economy& economy, const Objective& objective) {
  auto problems = validate(economy, objective);
  if (!problems.empty()) {
    std::string msg = "invalid instance:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw std::invalid_argument(msg);
  }
}

Rational rent_total(const std::vector<Rational>& rents) {
  Rational out;
  for (const Rational& r : rents) out += r;
  return out;
}

std::size_t regime_size(const Economy& economy,
                        const std::vector<Rational>& rents,
                        Direction direction) {
  return direction == Direction::kRebate
             ? sb_set(economy, rents).size()
             : below_budget_set(economy, rents).size();
}

void require_envy_free(const Economy& economy, const Allocation& alloc,
                       const char* where) {
  if (is_envy_free_at(economy, alloc, alloc.rent_sum()))
    throw InternalError(std::string(where) + ": iterate is not envy-free");
}

// Evaluates the step program at the recovered rents: feasibility plus an
// objective value exactly equal to the step value certify that the recovery
// did not lose ground.
void require_restore_matches_step(const BuiltProgram& step,
                                  const std::vector<Rational>& restored,
                                  const Rational& step_value) {
  std::vector<Rational> point(step.lp.var_names.size(), Rational(0));
  point[*step.bound_var] = step_value;
  for (std::size_t a = 0; a < step.rent_vars.size(); ++a)
    point[step.rent_vars[a]] = restored[a];
  for (const LpConstraint& c : step.lp.constraints) {
    Rational lhs;
    for (const auto& [var, coeff] : c.form) lhs += coeff * point[var];
    bool ok = true;
    switch (c.relation) {
      case Relation::kLessEq: ok = lhs <= c.rhs; break;
      case Relation::kGreaterEq: ok = lhs >= c.rhs; break;
      case Relation::kEqual: ok = lhs == c.rhs; break;
    }
    if (!ok)
      throw InternalError(
          "recovered rents fall outside the step program (constraint " +
          c.label + ")");
  }
}

LpSolution solve_or_die(const LinearProgram& lp) {
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal)
    throw InternalError("program " + lp.tag + " was expected to be solvable");
  return sol;
}

}  // namespace

std::pair<Rational, Allocation> initialize(const Economy& economy,
                                           const Objective& objective) {
  require_valid(economy, objective);
  std::size_t n = economy.size();
  Direction direction = direction_for(objective.family);

  Rational boundary =
      direction == Direction::kRebate
          ? max(economy.total_rent, high_rent_bound(economy))
          : min(economy.total_rent, low_rent_bound(economy));

  std::vector<std::vector<Rational>> table(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      table[i][a] = direction == Direction::kRebate
                        ? linearized_value(economy, i, a)
                        : economy.value(i, a);
  std::vector<std::size_t> sigma =
      optimal_assignment(table, OptimizeSense::kMaximize);

  BuiltProgram init =
      build_init_lp(economy, objective, sigma, boundary, direction);
  LpSolution sol = solve_or_die(init.lp);

  Allocation alloc{init.rents_from(sol), sigma};
  require_envy_free(economy, alloc, "initialize");
  if (!check_membership(economy, alloc, objective).member)
    throw InternalError("initialize: boundary allocation left its selection");
  return {boundary, alloc};
}

SolveResult solve(const Economy& economy, const Objective& objective) {
  require_valid(economy, objective);
  Direction direction = direction_for(objective.family);
  bool rebate = direction == Direction::kRebate;
  OptimizeSense matching_sense =
      rebate ? OptimizeSense::kMaximize : OptimizeSense::kMinimize;
  const Rational& m = economy.total_rent;

  SolveResult result;
  auto [boundary, init_alloc] = initialize(economy, objective);
  result.trace.boundary_rent = boundary;
  result.trace.init_allocation = init_alloc;

  std::vector<Rational> rents = init_alloc.rents;
  std::vector<std::size_t> sigma = init_alloc.assignment;
  std::size_t prev_regime = regime_size(economy, rents, direction);
  std::optional<Rational> prev_weight;
  const unsigned long long bound =
      iteration_bound(economy.size(), economy.slope_set.size());

  for (unsigned long long s = 1; rent_total(rents) != m; ++s) {
    if (s > bound)
      throw InternalError("loop exceeded its iteration budget of " +
                          std::to_string(bound));

    TightEnvyGraph graph = tight_graph(economy, rents, direction);
    MatchingResult match =
        extremal_perfect_matching(graph, economy.slope_set, matching_sense);
    sigma = match.assignment;

    BuiltProgram step =
        build_step_lp(economy, objective, sigma, rents,
                      sb_set(economy, rents), m, direction);
    LpSolution step_sol = solve_or_die(step.lp);
    std::vector<Rational> step_rents = step.rents_from(step_sol);
    Rational step_value = step_sol.value;

    Allocation step_alloc{step_rents, sigma};
    require_envy_free(economy, step_alloc, "step");
    if (objective.family == ObjectiveFamily::kMaxminUtility) {
      for (std::size_t a = 0; a < rents.size(); ++a)
        if (!(step_rents[a] < rents[a]))
          throw InternalError("a rebate bound is binding at a step optimum");
    }

    IterationRecord record;
    record.s = static_cast<std::size_t>(s);
    record.sigma = sigma;
    record.weight_exponents = match.weight_exponents;
    record.matching_weight = match.product_weight;
    record.step_rents = step_rents;
    record.step_value = step_value;
    record.membership = check_membership(economy, step_alloc, objective);

    std::vector<Rational> adopted;
    if (record.membership.member) {
      adopted = step_rents;
    } else {
      BuiltProgram restore = build_restore_lp(
          economy, objective, sigma, rents, step_rents, step_value, direction);
      LpSolution restore_sol = solve_or_die(restore.lp);
      adopted = restore.rents_from(restore_sol);
      record.restore_rents = adopted;

      require_restore_matches_step(step, adopted, step_value);
      Allocation restored_alloc{adopted, sigma};
      require_envy_free(economy, restored_alloc, "restore");
      if (!check_membership(economy, restored_alloc, objective).member)
        throw InternalError("recovered allocation left its selection");
    }

    rents = adopted;
    std::size_t regime = regime_size(economy, rents, direction);
    record.sb_size_after = regime;
    // Progress: a budget pair left the regime set, the matching weight
    // moved, or the adopted rents changed which matching is extremal (the
    // weight move then lands on the next iteration).
    bool terminal = rent_total(rents) == m;
    if (!terminal) {
      bool sb_released = regime < prev_regime;
      bool weight_moved =
          prev_weight && !(match.product_weight == *prev_weight);
      bool matching_shift = false;
      if (!sb_released && !weight_moved) {
        MatchingResult ahead = extremal_perfect_matching(
            tight_graph(economy, rents, direction), economy.slope_set,
            matching_sense);
        matching_shift = !(ahead.product_weight == match.product_weight);
      }
      if (!sb_released && !weight_moved && !matching_shift)
        throw InternalError(
            "iteration made no progress: regime set, matching weight, and "
            "extremal matching all unchanged");
    }
    prev_regime = regime;
    prev_weight = match.product_weight;
    result.trace.iterations.push_back(std::move(record));
  }

  result.allocation = Allocation{rents, sigma};
  result.trace.final_allocation = result.allocation;

  if (!(result.allocation.rent_sum() == m))
    throw InternalError("final rents do not balance the budget");
  require_envy_free(economy, result.allocation, "final");
  if (!check_membership(economy, result.allocation, objective).member)
    throw InternalError("final allocation failed its membership check");
  result.objective_value =
      objective_value(economy, result.allocation, objective);
  result.trace.objective_value = result.objective_value;
  result.certified = true;
  return result;
}

Allocation rebate_baseline(const Economy& economy) {
  Objective any = Objective::full_scope(ObjectiveFamily::kMaxminUtility,
                                        economy);
  auto [boundary, alloc] = initialize(economy, any);
  (void)boundary;
  const Rational& m = economy.total_rent;

  std::vector<Rational> rents = alloc.rents;
  std::vector<std::size_t> sigma = alloc.assignment;
  const unsigned long long bound =
      iteration_bound(economy.size(), economy.slope_set.size());

  for (unsigned long long s = 1; rent_total(rents) != m; ++s) {
    if (s > bound)
      throw InternalError("baseline exceeded its iteration budget");
    TightEnvyGraph graph = tight_graph(economy, rents, Direction::kRebate);
    MatchingResult match = extremal_perfect_matching(
        graph, economy.slope_set, OptimizeSense::kMaximize);
    sigma = match.assignment;

    Rational eta = rent_total(rents) - m;
    BuiltProgram lp = build_baseline_lp(economy, sigma, rents, eta);
    LpSolution sol = solve_or_die(lp.lp);
    rents = lp.rents_from(sol);
    require_envy_free(economy, Allocation{rents, sigma}, "baseline");
  }
  return Allocation{rents, sigma};
}

SolveResult best_for_agent(const Economy& economy, std::size_t agent) {
  if (agent >= economy.size())
    throw std::invalid_argument("best_for_agent: unknown agent");
  Objective objective;
  objective.family = ObjectiveFamily::kMaxminUtility;
  objective.scope = {agent};
  objective.maps = {AffineMap{}};
  return solve(economy, objective);
}

}  // namespace rentfair
