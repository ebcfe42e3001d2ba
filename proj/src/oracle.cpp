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

#include "rentfair/oracle.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "rentfair/envy.hpp"
#include "rentfair/lp.hpp"

namespace rentfair {
namespace {

struct Interval {
  std::optional<Rational> lo;  // nullopt = -infinity
  std::optional<Rational> hi;  // nullopt = +infinity
};

std::vector<Interval> budget_intervals(const Economy& economy) {
  std::set<Rational> distinct;
  for (std::size_t i = 0; i < economy.size(); ++i)
    distinct.insert(economy.budget(i));
  std::vector<Rational> breaks(distinct.begin(), distinct.end());

  std::vector<Interval> out;
  out.push_back({std::nullopt, breaks.front()});
  for (std::size_t j = 0; j + 1 < breaks.size(); ++j)
    out.push_back({breaks[j], breaks[j + 1]});
  out.push_back({breaks.back(), std::nullopt});
  return out;
}

// The affine form of one agent's utility over one room restricted to an
// interval: intervals never straddle a budget, so exactly one branch of the
// kink applies (either agrees at the shared endpoint).
LeftLine cell_line(const Economy& economy, std::size_t agent,
                   std::size_t room, const Interval& cell) {
  LeftLine line;
  if (cell.lo && *cell.lo >= economy.budget(agent)) {
    line.nu = economy.value(agent, room) +
              economy.rho(agent) * economy.budget(agent);
    line.lambda = Rational(1) + economy.rho(agent);
  } else {
    line.nu = economy.value(agent, room);
    line.lambda = 1;
  }
  return line;
}

struct Candidate {
  Rational value;
  std::vector<Rational> rents;
  std::vector<std::size_t> sigma;
};

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

}  // namespace

OracleResult oracle_solve(const Economy& economy, const Objective& objective,
                          std::size_t guard) {
  {
    auto problems = validate(economy, objective);
    if (!problems.empty())
      throw std::invalid_argument("oracle: invalid instance: " +
                                  problems.front());
  }
  std::size_t n = economy.size();
  if (n > guard)
    throw SizeGuardError("oracle size guard: " + std::to_string(n) +
                         " agents exceeds the limit of " +
                         std::to_string(guard));

  bool take_max = objective.family == ObjectiveFamily::kMaxminUtility ||
                  objective.family == ObjectiveFamily::kMaxminRent;
  const Rational& m = economy.total_rent;
  std::vector<Interval> intervals = budget_intervals(economy);

  std::optional<Candidate> best;
  std::vector<std::size_t> all_sigmas_scratch(n);
  for (std::size_t i = 0; i < n; ++i) all_sigmas_scratch[i] = i;
  std::vector<std::vector<std::size_t>> sigmas;
  do {
    sigmas.push_back(all_sigmas_scratch);
  } while (std::next_permutation(all_sigmas_scratch.begin(),
                                 all_sigmas_scratch.end()));

  std::vector<std::size_t> cell(n, 0);
  std::vector<std::vector<LeftLine>> lines(n, std::vector<LeftLine>(n));
  while (true) {
    // Quick reject: the rent sum must be attainable inside the box.
    Rational lo_sum = 0, hi_sum = 0;
    bool lo_bounded = true, hi_bounded = true;
    for (std::size_t a = 0; a < n; ++a) {
      const Interval& iv = intervals[cell[a]];
      if (iv.lo) lo_sum += *iv.lo; else lo_bounded = false;
      if (iv.hi) hi_sum += *iv.hi; else hi_bounded = false;
    }
    bool plausible = (!lo_bounded || lo_sum <= m) &&
                     (!hi_bounded || hi_sum >= m);

    if (plausible) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
          lines[i][a] = cell_line(economy, i, a, intervals[cell[a]]);

      // Interval arithmetic kills most assignments before any program is
      // built: agent i can weakly prefer room x over room y somewhere in
      // the box only if the best of x beats the worst of y.
      std::vector<std::vector<std::vector<bool>>> pair_ok(
          n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, true)));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t x = 0; x < n; ++x) {
          if (!intervals[cell[x]].lo) continue;  // best utility unbounded
          Rational best_x =
              lines[i][x].nu - lines[i][x].lambda * *intervals[cell[x]].lo;
          for (std::size_t y = 0; y < n; ++y) {
            if (y == x || !intervals[cell[y]].hi) continue;
            Rational worst_y =
                lines[i][y].nu - lines[i][y].lambda * *intervals[cell[y]].hi;
            pair_ok[i][x][y] = best_x >= worst_y;
          }
        }
      }

      for (const std::vector<std::size_t>& sigma : sigmas) {
        bool viable = true;
        for (std::size_t i = 0; i < n && viable; ++i)
          for (std::size_t j = 0; j < n && viable; ++j)
            if (j != i && !pair_ok[i][sigma[i]][sigma[j]]) viable = false;
        if (!viable) continue;

        LinearProgram lp;
        lp.tag = "oracle-cell";
        lp.sense = take_max ? LpSense::kMaximize : LpSense::kMinimize;
        std::size_t bound_var = lp.add_variable("R");
        std::vector<std::size_t> rent_vars(n);
        for (std::size_t a = 0; a < n; ++a)
          rent_vars[a] = lp.add_variable("r_" + economy.room_names[a]);
        lp.objective.emplace_back(bound_var, Rational(1));

        for (std::size_t a = 0; a < n; ++a) {
          const Interval& iv = intervals[cell[a]];
          if (iv.lo)
            lp.add_constraint({{rent_vars[a], Rational(1)}},
                              Relation::kGreaterEq, *iv.lo);
          if (iv.hi)
            lp.add_constraint({{rent_vars[a], Rational(1)}},
                              Relation::kLessEq, *iv.hi);
        }

        for (std::size_t i = 0; i < n; ++i) {
          std::size_t si = sigma[i];
          for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::size_t sj = sigma[j];
            lp.add_constraint({{rent_vars[si], -lines[i][si].lambda},
                               {rent_vars[sj], lines[i][sj].lambda}},
                              Relation::kGreaterEq,
                              lines[i][sj].nu - lines[i][si].nu);
          }
        }

        Relation bound_rel = take_max ? Relation::kLessEq
                                      : Relation::kGreaterEq;
        for (std::size_t k = 0; k < objective.scope.size(); ++k) {
          std::size_t id = objective.scope[k];
          const AffineMap& map = objective.map_for(k);
          if (objective.scopes_agents()) {
            std::size_t si = sigma[id];
            lp.add_constraint({{bound_var, Rational(1)},
                               {rent_vars[si],
                                map.slope * lines[id][si].lambda}},
                              bound_rel,
                              map.intercept + map.slope * lines[id][si].nu);
          } else {
            lp.add_constraint(
                {{bound_var, Rational(1)}, {rent_vars[id], -map.slope}},
                bound_rel, map.intercept);
          }
        }

        LinearForm sum;
        for (std::size_t a = 0; a < n; ++a)
          sum.emplace_back(rent_vars[a], Rational(1));
        lp.add_constraint(std::move(sum), Relation::kEqual, m);

        LpSolution sol = solve_lp(lp);
        if (sol.status == LpStatus::kOptimal) {
          Candidate cand;
          cand.value = sol.value;
          cand.sigma = sigma;
          cand.rents.resize(n);
          for (std::size_t a = 0; a < n; ++a)
            cand.rents[a] = sol.point[rent_vars[a]];
          bool better =
              !best || (take_max ? cand.value > best->value
                                 : cand.value < best->value);
          bool tie = best && cand.value == best->value;
          if (tie && (cand.sigma < best->sigma ||
                      (cand.sigma == best->sigma &&
                       lex_less(cand.rents, best->rents))))
            better = true;
          if (better) best = std::move(cand);
        }
      }
    }

    std::size_t pos = 0;
    while (pos < n && ++cell[pos] == intervals.size()) {
      cell[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }

  if (!best)
    throw InternalError(
        "oracle found no envy-free allocation; they always exist");

  OracleResult out{best->value, Allocation{best->rents, best->sigma}};
  if (is_envy_free_at(economy, out.witness, m))
    throw InternalError("oracle witness is not envy-free");
  return out;
}

bool oracle_is_optimal(const Economy& economy, const Objective& objective,
                       const Allocation& alloc, std::size_t guard) {
  if (alloc.rents.size() != economy.size() ||
      alloc.assignment.size() != economy.size())
    return false;
  std::vector<bool> taken(economy.size(), false);
  for (std::size_t room : alloc.assignment) {
    if (room >= economy.size() || taken[room]) return false;
    taken[room] = true;
  }
  if (!(alloc.rent_sum() == economy.total_rent)) return false;
  if (is_envy_free(economy, alloc)) return false;
  OracleResult truth = oracle_solve(economy, objective, guard);
  return objective_value(economy, alloc, objective) == truth.value;
}

}  // namespace rentfair
