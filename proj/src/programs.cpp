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

#include "rentfair/programs.hpp"

#include <string>

namespace rentfair {

Direction direction_for(ObjectiveFamily family) {
  switch (family) {
    case ObjectiveFamily::kMaxminUtility:
    case ObjectiveFamily::kMinmaxRent:
      return Direction::kRebate;
    case ObjectiveFamily::kMinmaxUtility:
    case ObjectiveFamily::kMaxminRent:
      return Direction::kSurcharge;
  }
  throw std::invalid_argument("unknown objective family");
}

namespace {

void require_pairing(const Objective& objective, Direction direction,
                     const char* what) {
  if (direction_for(objective.family) != direction)
    throw std::invalid_argument(std::string(what) +
                                ": family/direction pairing mismatch");
}

// Degenerate optima are refined toward least movement: rebate programs keep
// every rent as high as the optimal face allows, surcharge programs as low.
// The refined point is the face's end the recovery program would otherwise
// move to, so on-path steps never trigger a spurious recovery.
BuiltProgram new_program(const Economy& economy, bool with_bound,
                         LpSense sense, Direction direction,
                         std::string tag) {
  BuiltProgram built;
  built.lp.sense = sense;
  built.lp.tag = std::move(tag);
  if (with_bound) built.bound_var = built.lp.add_variable("R");
  for (const std::string& room : economy.room_names)
    built.rent_vars.push_back(built.lp.add_variable("r_" + room));
  built.lp.lex_vars = built.rent_vars;
  built.lp.lex_direction = direction == Direction::kRebate
                               ? LexDirection::kMaximize
                               : LexDirection::kMinimize;
  return built;
}

// Ordered-pair no-envy rows under per-(agent, room) affine utilities
// u_i(x, a) = nu[i][a] - slope[i][a] * x evaluated through sigma:
//   -slope[i][si] * t_si + slope[i][sj] * t_sj >= nu[i][sj] - nu[i][si].
void add_linearized_no_envy(BuiltProgram& built, const Economy& economy,
                            const std::vector<std::size_t>& sigma,
                            const std::vector<std::vector<LeftLine>>& lines) {
  std::size_t n = economy.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t si = sigma[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::size_t sj = sigma[j];
      LinearForm form;
      form.emplace_back(built.rent_vars[si], -lines[i][si].lambda);
      form.emplace_back(built.rent_vars[sj], lines[i][sj].lambda);
      built.lp.add_constraint(std::move(form), Relation::kGreaterEq,
                              lines[i][sj].nu - lines[i][si].nu,
                              "noenvy_" + std::to_string(i) + "_" +
                                  std::to_string(j));
    }
  }
}

// Quasi-linear table as a LeftLine matrix (slope 1 everywhere).
std::vector<std::vector<LeftLine>> table_lines(
    const std::vector<std::vector<Rational>>& table) {
  std::vector<std::vector<LeftLine>> lines(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    lines[i].resize(table[i].size());
    for (std::size_t a = 0; a < table[i].size(); ++a) {
      lines[i][a].nu = table[i][a];
      lines[i][a].lambda = 1;
    }
  }
  return lines;
}

// Scoped bound rows tying R to the affine images of the linearized
// utilities:  R <=/>= f_i(nu - lambda * t_{sigma(i)}).
void add_utility_bounds(BuiltProgram& built, const Objective& objective,
                        const std::vector<std::size_t>& sigma,
                        const std::vector<std::vector<LeftLine>>& lines,
                        Relation relation) {
  for (std::size_t k = 0; k < objective.scope.size(); ++k) {
    std::size_t i = objective.scope[k];
    std::size_t si = sigma[i];
    const AffineMap& f = objective.map_for(k);
    LinearForm form;
    form.emplace_back(*built.bound_var, Rational(1));
    form.emplace_back(built.rent_vars[si], f.slope * lines[i][si].lambda);
    built.lp.add_constraint(std::move(form), relation,
                            f.intercept + f.slope * lines[i][si].nu,
                            "bound_" + std::to_string(i));
  }
}

// Scoped bound rows tying R to the affine images of scoped rents:
//   R <=/>= g_a(r_a).
void add_rent_bounds(BuiltProgram& built, const Objective& objective,
                     Relation relation) {
  for (std::size_t k = 0; k < objective.scope.size(); ++k) {
    std::size_t a = objective.scope[k];
    const AffineMap& g = objective.map_for(k);
    LinearForm form;
    form.emplace_back(*built.bound_var, Rational(1));
    form.emplace_back(built.rent_vars[a], -g.slope);
    built.lp.add_constraint(std::move(form), relation, g.intercept,
                            "bound_room_" + std::to_string(a));
  }
}

void add_rent_sum(BuiltProgram& built, Relation relation,
                  const Rational& rhs) {
  LinearForm form;
  for (std::size_t var : built.rent_vars)
    form.emplace_back(var, Rational(1));
  built.lp.add_constraint(std::move(form), relation, rhs, "rent_sum");
}

void add_rent_box(BuiltProgram& built, const std::vector<Rational>& bounds,
                  Relation relation, const char* prefix) {
  for (std::size_t a = 0; a < built.rent_vars.size(); ++a) {
    LinearForm form;
    form.emplace_back(built.rent_vars[a], Rational(1));
    built.lp.add_constraint(std::move(form), relation, bounds[a],
                            std::string(prefix) + std::to_string(a));
  }
}

// Budget-regime rows, collapsed to the tightest bound per room.
void add_regime_bounds(
    BuiltProgram& built, const Economy& economy,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
    Relation relation, const char* prefix) {
  std::size_t n = economy.size();
  std::vector<std::optional<Rational>> tight(n);
  for (const auto& [agent, room] : pairs) {
    const Rational& b = economy.budget(agent);
    if (!tight[room]) {
      tight[room] = b;
    } else if (relation == Relation::kGreaterEq ? b > *tight[room]
                                                : b < *tight[room]) {
      tight[room] = b;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!tight[a]) continue;
    LinearForm form;
    form.emplace_back(built.rent_vars[a], Rational(1));
    built.lp.add_constraint(std::move(form), relation, *tight[a],
                            std::string(prefix) + std::to_string(a));
  }
}

}  // namespace

BuiltProgram build_init_lp(const Economy& economy, const Objective& objective,
                           const std::vector<std::size_t>& sigma,
                           const Rational& target_rent, Direction direction) {
  require_pairing(objective, direction, "build_init_lp");
  std::size_t n = economy.size();
  bool rebate = direction == Direction::kRebate;

  std::vector<std::vector<Rational>> table(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      table[i][a] =
          rebate ? linearized_value(economy, i, a) : economy.value(i, a);

  bool maximize = objective.family == ObjectiveFamily::kMaxminUtility ||
                  objective.family == ObjectiveFamily::kMaxminRent;
  BuiltProgram built = new_program(
      economy, /*with_bound=*/true,
      maximize ? LpSense::kMaximize : LpSense::kMinimize, direction,
      "init/" + family_name(objective.family));
  built.lp.objective.emplace_back(*built.bound_var, Rational(1));

  if (objective.scopes_agents()) {
    // For the rebate side the bound runs through (1+rho)(V - r); the raw
    // table already carries slope 1 on the surcharge side.
    std::vector<std::vector<LeftLine>> lines = table_lines(table);
    if (rebate) {
      for (std::size_t i = 0; i < n; ++i) {
        Rational stretch = Rational(1) + economy.rho(i);
        for (std::size_t a = 0; a < n; ++a) {
          lines[i][a].nu = stretch * table[i][a];
          lines[i][a].lambda = stretch;
        }
      }
    }
    add_utility_bounds(built, objective, sigma, lines,
                       maximize ? Relation::kLessEq : Relation::kGreaterEq);
  } else {
    add_rent_bounds(built, objective,
                    maximize ? Relation::kLessEq : Relation::kGreaterEq);
  }

  add_linearized_no_envy(built, economy, sigma, table_lines(table));
  add_rent_sum(built, Relation::kEqual, target_rent);
  return built;
}

BuiltProgram build_step_lp(
    const Economy& economy, const Objective& objective,
    const std::vector<std::size_t>& sigma,
    const std::vector<Rational>& prev_rents,
    const std::vector<std::pair<std::size_t, std::size_t>>& sb_prev,
    const Rational& target_rent, Direction direction) {
  require_pairing(objective, direction, "build_step_lp");
  bool rebate = direction == Direction::kRebate;
  auto lines = rebate ? nu_lambda(economy, prev_rents)
                      : nu_kappa(economy, prev_rents);

  bool maximize = objective.family == ObjectiveFamily::kMaxminUtility ||
                  objective.family == ObjectiveFamily::kMaxminRent;
  BuiltProgram built = new_program(
      economy, /*with_bound=*/true,
      maximize ? LpSense::kMaximize : LpSense::kMinimize, direction,
      "step/" + family_name(objective.family));
  built.lp.objective.emplace_back(*built.bound_var, Rational(1));

  if (objective.scopes_agents()) {
    add_utility_bounds(built, objective, sigma, lines,
                       maximize ? Relation::kLessEq : Relation::kGreaterEq);
  } else {
    add_rent_bounds(built, objective,
                    maximize ? Relation::kLessEq : Relation::kGreaterEq);
  }
  add_linearized_no_envy(built, economy, sigma, lines);

  if (rebate) {
    add_rent_box(built, prev_rents, Relation::kLessEq, "rebate_");
    // Rents that violated a budget stay at or above it, so the left
    // linearization remains exact everywhere in the feasible box.
    add_regime_bounds(built, economy, sb_prev, Relation::kGreaterEq, "sb_");
    add_rent_sum(built, Relation::kGreaterEq, target_rent);
  } else {
    add_rent_box(built, prev_rents, Relation::kGreaterEq, "surcharge_");
    // Mirror regime set: rents strictly below a budget stay at or below it.
    // The kink itself belongs to the violated side of the right slope, so
    // pairs sitting exactly at their budget are free to move up.
    add_regime_bounds(built, economy, below_budget_set(economy, prev_rents),
                      Relation::kLessEq, "bb_");
    add_rent_sum(built, Relation::kLessEq, target_rent);
  }
  return built;
}

BuiltProgram build_restore_lp(const Economy& economy,
                              const Objective& objective,
                              const std::vector<std::size_t>& sigma,
                              const std::vector<Rational>& prev_rents,
                              const std::vector<Rational>& step_rents,
                              const Rational& step_value,
                              Direction direction) {
  require_pairing(objective, direction, "build_restore_lp");
  bool rebate = direction == Direction::kRebate;
  auto lines = rebate ? nu_lambda(economy, prev_rents)
                      : nu_kappa(economy, prev_rents);

  BuiltProgram built = new_program(
      economy, /*with_bound=*/false,
      rebate ? LpSense::kMaximize : LpSense::kMinimize, direction,
      "restore/" + family_name(objective.family));
  for (std::size_t var : built.rent_vars)
    built.lp.objective.emplace_back(var, Rational(1));

  // Hold the step value fixed: the bound rows lose their R variable and
  // keep step_value on the right-hand side.
  if (objective.scopes_agents()) {
    for (std::size_t k = 0; k < objective.scope.size(); ++k) {
      std::size_t i = objective.scope[k];
      std::size_t si = sigma[i];
      const AffineMap& f = objective.map_for(k);
      LinearForm form;
      form.emplace_back(built.rent_vars[si], -f.slope * lines[i][si].lambda);
      built.lp.add_constraint(
          std::move(form),
          rebate ? Relation::kGreaterEq : Relation::kLessEq,
          step_value - f.intercept - f.slope * lines[i][si].nu,
          "hold_" + std::to_string(i));
    }
  } else {
    for (std::size_t k = 0; k < objective.scope.size(); ++k) {
      std::size_t a = objective.scope[k];
      const AffineMap& g = objective.map_for(k);
      LinearForm form;
      form.emplace_back(built.rent_vars[a], g.slope);
      built.lp.add_constraint(
          std::move(form), rebate ? Relation::kLessEq : Relation::kGreaterEq,
          step_value - g.intercept, "hold_room_" + std::to_string(a));
    }
  }

  add_linearized_no_envy(built, economy, sigma, lines);
  add_rent_box(built, step_rents,
               rebate ? Relation::kGreaterEq : Relation::kLessEq, "step_");
  return built;
}

BuiltProgram build_baseline_lp(const Economy& economy,
                             const std::vector<std::size_t>& sigma,
                             const std::vector<Rational>& prev_rents,
                             const Rational& eta) {
  if (eta.is_negative())
    throw std::invalid_argument("build_baseline_lp: eta must be nonnegative");
  auto lines = nu_lambda(economy, prev_rents);

  // Descends the rent sum by up to eta; the sum is the objective, so the
  // program stops exactly at the first regime or no-envy obstruction.
  BuiltProgram built =
      new_program(economy, /*with_bound=*/false, LpSense::kMinimize,
                  Direction::kRebate, "baseline-rebate");
  for (std::size_t var : built.rent_vars)
    built.lp.objective.emplace_back(var, Rational(1));

  add_linearized_no_envy(built, economy, sigma, lines);
  add_rent_box(built, prev_rents, Relation::kLessEq, "rebate_");
  add_regime_bounds(built, economy, sb_set(economy, prev_rents),
                    Relation::kGreaterEq, "sb_");
  Rational floor = 0;
  for (const Rational& r : prev_rents) floor += r;
  floor -= eta;
  add_rent_sum(built, Relation::kGreaterEq, floor);
  return built;
}

}  // namespace rentfair
