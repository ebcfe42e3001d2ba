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

#include "rentfair/matching.hpp"

#include <optional>

namespace rentfair {
namespace {

// The assignment machinery runs over an ordered abelian group: (Q, +) for
// value sums, (Q_{>0}, *) for slope products. Log-weights order products the
// same way but are irrational; staying in the multiplicative group keeps
// every comparison exact.
struct GroupOps {
  bool multiplicative = false;

  Rational identity() const { return multiplicative ? 1 : 0; }
  Rational combine(const Rational& a, const Rational& b) const {
    return multiplicative ? a * b : a + b;
  }
  Rational subtract(const Rational& a, const Rational& b) const {
    return multiplicative ? a / b : a - b;
  }
  Rational invert(const Rational& a) const {
    return multiplicative ? Rational(1) / a : -a;
  }
};

using CostMatrix = std::vector<std::vector<std::optional<Rational>>>;

// Min-cost perfect matching by shortest augmenting paths with potentials
// (Hungarian), generic over the group. Absent costs are forbidden edges.
// nullopt when no perfect matching exists.
std::optional<std::vector<std::size_t>> min_cost_matching(
    const CostMatrix& cost, const GroupOps& ops) {
  std::size_t n = cost.size();
  if (n == 0) return std::vector<std::size_t>{};

  std::vector<Rational> u(n + 1, ops.identity());
  std::vector<Rational> v(n + 1, ops.identity());
  std::vector<std::size_t> p(n + 1, 0);
  std::vector<std::size_t> way(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      std::size_t i0 = p[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        if (cost[i0 - 1][j - 1]) {
          Rational cur = ops.subtract(
              ops.subtract(*cost[i0 - 1][j - 1], u[i0]), v[j]);
          if (!minv[j] || cur < *minv[j]) {
            minv[j] = std::move(cur);
            way[j] = j0;
          }
        }
        if (minv[j] && (!delta || *minv[j] < *delta)) {
          delta = *minv[j];
          j1 = j;
        }
      }
      if (!delta) return std::nullopt;
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] = ops.combine(u[p[j]], *delta);
          v[j] = ops.subtract(v[j], *delta);
        } else if (minv[j]) {
          minv[j] = ops.subtract(*minv[j], *delta);
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j)
    if (p[j] != 0) assignment[p[j] - 1] = j - 1;
  return assignment;
}

std::optional<Rational> matching_value(const CostMatrix& cost,
                                       const GroupOps& ops) {
  auto m = min_cost_matching(cost, ops);
  if (!m) return std::nullopt;
  Rational total = ops.identity();
  for (std::size_t i = 0; i < cost.size(); ++i)
    total = ops.combine(total, *cost[i][(*m)[i]]);
  return total;
}

// Min-cost matching with ties broken by the lexicographically smallest
// assignment vector: fix rows in order to the smallest column that keeps the
// optimum attainable on the remaining subproblem.
std::optional<std::vector<std::size_t>> lexicographic_min_cost(
    const CostMatrix& cost, const GroupOps& ops) {
  std::size_t n = cost.size();
  auto best = matching_value(cost, ops);
  if (!best) return std::nullopt;

  std::vector<std::size_t> fixed(n, 0);
  std::vector<bool> used(n, false);
  Rational prefix = ops.identity();
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t a = 0; a < n && !found; ++a) {
      if (used[a] || !cost[i][a]) continue;
      CostMatrix sub;
      sub.reserve(n - i - 1);
      for (std::size_t r = i + 1; r < n; ++r) {
        std::vector<std::optional<Rational>> row;
        row.reserve(n - i - 1);
        for (std::size_t c = 0; c < n; ++c)
          if (!used[c] && c != a) row.push_back(cost[r][c]);
        sub.push_back(std::move(row));
      }
      auto rest = matching_value(sub, ops);
      if (!rest) continue;
      if (ops.combine(ops.combine(prefix, *cost[i][a]), *rest) == *best) {
        fixed[i] = a;
        used[a] = true;
        prefix = ops.combine(prefix, *cost[i][a]);
        found = true;
      }
    }
    if (!found)
      throw InternalError("assignment tie-break lost the optimal value");
  }
  return fixed;
}

}  // namespace

std::vector<std::size_t> optimal_assignment(
    const std::vector<std::vector<Rational>>& values, OptimizeSense sense) {
  std::size_t n = values.size();
  for (const auto& row : values)
    if (row.size() != n)
      throw std::invalid_argument("optimal_assignment: matrix must be square");

  GroupOps ops;  // additive
  CostMatrix cost(n, std::vector<std::optional<Rational>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      cost[i][a] = sense == OptimizeSense::kMaximize ? ops.invert(values[i][a])
                                                     : values[i][a];
  auto out = lexicographic_min_cost(cost, ops);
  if (!out) throw InternalError("complete assignment problem infeasible");
  return *out;
}

MatchingResult extremal_perfect_matching(const TightEnvyGraph& graph,
                                         const SlopeSet& slopes,
                                         OptimizeSense sense) {
  std::size_t n = graph.size();
  GroupOps ops{.multiplicative = true};
  CostMatrix cost(n, std::vector<std::optional<Rational>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!graph.edges[i][a]) continue;
      cost[i][a] = sense == OptimizeSense::kMaximize
                       ? ops.invert(graph.weights[i][a])
                       : graph.weights[i][a];
    }
  }
  auto assignment = lexicographic_min_cost(cost, ops);
  if (!assignment)
    throw std::invalid_argument(
        "tight-envy graph admits no perfect matching (rents are not "
        "envy-free)");

  MatchingResult out;
  out.assignment = *assignment;
  out.weight_exponents.assign(slopes.size(), 0);
  for (std::size_t i = 0; i < n; ++i)
    ++out.weight_exponents[graph.slope_indices[i][out.assignment[i]]];
  out.product_weight = 1;
  for (std::size_t j = 0; j < slopes.size(); ++j) {
    Rational base = Rational(1) + slopes.rhos[j];
    for (std::size_t e = 0; e < out.weight_exponents[j]; ++e)
      out.product_weight *= base;
  }
  return out;
}

}  // namespace rentfair
