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

#include "rentfair/envy.hpp"

#include <algorithm>
#include <deque>

namespace rentfair {

TightEnvyGraph tight_graph(const Economy& economy,
                           const std::vector<Rational>& rents,
                           Direction direction) {
  std::size_t n = economy.size();
  if (rents.size() != n)
    throw std::invalid_argument("tight_graph: one rent required per room");

  auto lines = direction == Direction::kRebate ? nu_lambda(economy, rents)
                                               : nu_kappa(economy, rents);
  TightEnvyGraph g;
  g.direction = direction;
  g.edges.assign(n, std::vector<bool>(n, false));
  g.weights.assign(n, std::vector<Rational>(n, Rational(0)));
  g.slope_indices.assign(n, std::vector<std::size_t>(n, 0));

  for (std::size_t i = 0; i < n; ++i) {
    Rational best = utility(economy, i, rents[0], 0);
    for (std::size_t a = 1; a < n; ++a)
      best = max(best, utility(economy, i, rents[a], a));
    for (std::size_t a = 0; a < n; ++a) {
      if (utility(economy, i, rents[a], a) == best) {
        g.edges[i][a] = true;
        g.weights[i][a] = lines[i][a].lambda;
        g.slope_indices[i][a] = lines[i][a].slope_index;
      }
    }
  }
  return g;
}

namespace {

std::optional<EnvyWitness> find_envy(const Economy& economy,
                                     const Allocation& alloc) {
  std::size_t n = economy.size();
  std::optional<EnvyWitness> worst;
  for (std::size_t i = 0; i < n; ++i) {
    Rational own = own_utility(economy, alloc, i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::size_t room = alloc.assignment[j];
      Rational other = utility(economy, i, alloc.rents[room], room);
      if (other > own) {
        Rational gap = other - own;
        if (!worst || gap > worst->gap) worst = EnvyWitness{i, j, gap};
      }
    }
  }
  return worst;
}

}  // namespace

std::optional<EnvyWitness> is_envy_free_at(const Economy& economy,
                                           const Allocation& alloc,
                                           const Rational& total) {
  if (alloc.assignment.size() != economy.size() ||
      alloc.rents.size() != economy.size())
    throw std::invalid_argument("is_envy_free: allocation size mismatch");
  std::vector<bool> taken(economy.size(), false);
  for (std::size_t room : alloc.assignment) {
    if (room >= economy.size() || taken[room])
      throw std::invalid_argument("is_envy_free: assignment is not a bijection");
    taken[room] = true;
  }
  if (!(alloc.rent_sum() == total))
    throw std::invalid_argument("is_envy_free: rents do not sum to the total");
  return find_envy(economy, alloc);
}

std::optional<EnvyWitness> is_envy_free(const Economy& economy,
                                        const Allocation& alloc) {
  return is_envy_free_at(economy, alloc, economy.total_rent);
}

std::vector<std::size_t> extreme_set(const Allocation& alloc,
                                     const Economy& economy,
                                     const Objective& objective) {
  bool take_min = objective.family == ObjectiveFamily::kMaxminUtility ||
                  objective.family == ObjectiveFamily::kMaxminRent;
  std::optional<Rational> bound;
  std::vector<Rational> scores(objective.scope.size());
  for (std::size_t k = 0; k < objective.scope.size(); ++k) {
    std::size_t id = objective.scope[k];
    Rational raw = objective.scopes_agents()
                       ? own_utility(economy, alloc, id)
                       : alloc.rents[id];
    scores[k] = objective.map_for(k)(raw);
    if (!bound || (take_min ? scores[k] < *bound : scores[k] > *bound))
      bound = scores[k];
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < objective.scope.size(); ++k)
    if (scores[k] == *bound) out.push_back(objective.scope[k]);
  std::sort(out.begin(), out.end());
  return out;
}

Rational objective_value(const Economy& economy, const Allocation& alloc,
                         const Objective& objective) {
  bool take_min = objective.family == ObjectiveFamily::kMaxminUtility ||
                  objective.family == ObjectiveFamily::kMaxminRent;
  std::optional<Rational> bound;
  for (std::size_t k = 0; k < objective.scope.size(); ++k) {
    std::size_t id = objective.scope[k];
    Rational raw = objective.scopes_agents()
                       ? own_utility(economy, alloc, id)
                       : alloc.rents[id];
    Rational score = objective.map_for(k)(raw);
    if (!bound || (take_min ? score < *bound : score > *bound)) bound = score;
  }
  if (!bound) throw std::invalid_argument("objective scope is empty");
  return *bound;
}

namespace {

// Nodes that can reach `seeds` along directed edges (forward = false walks
// edge[i][j] from j back to i), seeds included.
std::vector<bool> connected_set(const std::vector<std::vector<bool>>& edge,
                                const std::vector<std::size_t>& seeds,
                                bool from_seeds) {
  std::size_t n = edge.size();
  std::vector<bool> hit(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t s : seeds) {
    hit[s] = true;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y = 0; y < n; ++y) {
      bool linked = from_seeds ? edge[x][y] : edge[y][x];
      if (linked && !hit[y]) {
        hit[y] = true;
        queue.push_back(y);
      }
    }
  }
  return hit;
}

}  // namespace

MembershipVerdict check_membership(const Economy& economy,
                                   const Allocation& alloc,
                                   const Objective& objective) {
  std::size_t n = economy.size();
  MembershipVerdict verdict;
  verdict.extreme = extreme_set(alloc, economy, objective);

  if (auto envy = find_envy(economy, alloc)) {
    verdict.member = false;
    verdict.unreached = {objective.scopes_agents()
                             ? envy->envious
                             : alloc.assignment[envy->envious]};
    return verdict;
  }

  // Indifference digraph. Utility families connect agents (i -> j when i is
  // indifferent to j's bundle); rent families connect rooms through their
  // occupants.
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  std::vector<std::size_t> occupant(n);
  for (std::size_t i = 0; i < n; ++i) occupant[alloc.assignment[i]] = i;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t agent = objective.scopes_agents() ? x : occupant[x];
    Rational own = own_utility(economy, alloc, agent);
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      std::size_t room =
          objective.scopes_agents() ? alloc.assignment[y] : y;
      if (utility(economy, agent, alloc.rents[room], room) == own)
        edge[x][y] = true;
    }
  }

  // Maxmin-utility and minmax-rent demand a path from every node to the
  // extreme set; the two mirrored families demand reachability from it.
  bool from_seeds = objective.family == ObjectiveFamily::kMinmaxUtility ||
                    objective.family == ObjectiveFamily::kMaxminRent;
  std::vector<bool> hit = connected_set(edge, verdict.extreme, from_seeds);
  for (std::size_t x = 0; x < n; ++x)
    if (!hit[x]) verdict.unreached.push_back(x);
  verdict.member = verdict.unreached.empty();
  return verdict;
}

}  // namespace rentfair
