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

#ifndef RENTFAIR_TESTS_TEST_UTIL_HPP
#define RENTFAIR_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "rentfair/gen.hpp"
#include "rentfair/lp.hpp"
#include "rentfair/matching.hpp"
#include "rentfair/model.hpp"

namespace rentfair::test {

inline Rational Q(long long n) { return Rational(n); }
inline Rational Q(long long n, long long d) {
  return Rational(BigInt(n), BigInt(d));
}

inline Economy make_economy(std::vector<std::vector<long long>> values,
                            std::vector<long long> budgets,
                            std::vector<Rational> slope_set,
                            std::vector<std::size_t> rho_index,
                            Rational total_rent) {
  Economy e;
  std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i)
    e.agent_names.push_back(std::to_string(i + 1));
  for (std::size_t a = 0; a < n; ++a)
    e.room_names.push_back(std::string(1, static_cast<char>('a' + a)));
  e.slope_set.rhos = std::move(slope_set);
  e.total_rent = std::move(total_rent);
  e.prefs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (long long v : values[i]) e.prefs[i].values.push_back(Q(v));
    e.prefs[i].budget = Q(budgets[i]);
    e.prefs[i].slope_index = rho_index[i];
  }
  return e;
}

// Quasi-linear 2x2 economy with zero budgets; the hand-checkable workhorse.
inline Economy e1(Rational total = Rational(10)) {
  return make_economy({{10, 2}, {4, 6}}, {0, 0}, {Rational(0)}, {0, 0},
                      std::move(total));
}

// Soft-budget 2x2 economy, slope set {0, 1}, both agents on slope 1.
inline Economy e2(Rational total = Rational(10)) {
  return make_economy({{10, 2}, {4, 6}}, {5, 5},
                      {Rational(0), Rational(1)}, {1, 1}, std::move(total));
}

inline std::vector<Rational> rents(std::initializer_list<Rational> list) {
  return std::vector<Rational>(list);
}

// Random small economy with a controllable number of distinct budget values
// (the oracle's cell count is exponential in it).
inline Economy random_economy(SplitMix64& rng, std::size_t n, std::size_t k,
                              std::size_t distinct_budgets = 2) {
  Economy e;
  for (std::size_t i = 0; i < n; ++i)
    e.agent_names.push_back(std::to_string(i + 1));
  for (std::size_t a = 0; a < n; ++a)
    e.room_names.push_back(std::string(1, static_cast<char>('a' + a)));
  for (std::size_t j = 0; j < k; ++j)
    e.slope_set.rhos.push_back(Rational(static_cast<long long>(j), 2));

  std::int64_t total = rng.uniform(-10, 40 * static_cast<std::int64_t>(n));
  e.total_rent = Q(total);

  std::vector<Rational> pool;
  std::int64_t anchor = total / static_cast<std::int64_t>(n);
  for (std::size_t b = 0; b < distinct_budgets; ++b) {
    std::int64_t raw = anchor + rng.uniform(-25, 25);
    pool.push_back(Q(raw < 0 ? 0 : raw));
  }

  e.prefs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a)
      e.prefs[i].values.push_back(Q(rng.uniform(0, 60)));
    e.prefs[i].budget =
        pool[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))];
    e.prefs[i].slope_index = static_cast<std::size_t>(
        rng.uniform(0, static_cast<std::int64_t>(k) - 1));
  }
  return e;
}

// Independent quasi-linear maxmin reference: one value-maximal assignment,
// one equalization program. Valid only for economies that are quasi-linear
// over the whole relevant range (slope set {0}).
struct QuasiLinearOpt {
  Rational value;
  std::vector<Rational> rents;
  std::vector<std::size_t> sigma;
};

inline QuasiLinearOpt quasilinear_maxmin(const Economy& e) {
  std::size_t n = e.size();
  std::vector<std::size_t> perm(n), best_sigma;
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::optional<Rational> best_sum;
  do {
    Rational sum;
    for (std::size_t i = 0; i < n; ++i) sum += e.value(i, perm[i]);
    if (!best_sum || sum > *best_sum) {
      best_sum = sum;
      best_sigma = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  LinearProgram lp;
  lp.tag = "quasilinear-reference";
  lp.sense = LpSense::kMaximize;
  std::size_t R = lp.add_variable("R");
  std::vector<std::size_t> rv(n);
  for (std::size_t a = 0; a < n; ++a)
    rv[a] = lp.add_variable("r" + std::to_string(a));
  lp.objective.emplace_back(R, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t si = best_sigma[i];
    lp.add_constraint({{R, Rational(1)}, {rv[si], Rational(1)}},
                      Relation::kLessEq, e.value(i, si));
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::size_t sj = best_sigma[j];
      lp.add_constraint({{rv[si], Rational(-1)}, {rv[sj], Rational(1)}},
                        Relation::kGreaterEq,
                        e.value(i, sj) - e.value(i, si));
    }
  }
  LinearForm sum;
  for (std::size_t a = 0; a < n; ++a) sum.emplace_back(rv[a], Rational(1));
  lp.add_constraint(std::move(sum), Relation::kEqual, e.total_rent);
  lp.lex_vars = rv;

  LpSolution sol = solve_lp(lp);
  QuasiLinearOpt out;
  out.value = sol.value;
  out.sigma = best_sigma;
  for (std::size_t a = 0; a < n; ++a) out.rents.push_back(sol.point[rv[a]]);
  return out;
}

// Every perfect matching of a tight graph with its slope product, by
// enumeration. The independent check for the Hungarian path.
struct EnumeratedMatching {
  std::vector<std::size_t> assignment;
  Rational product;
};

inline std::vector<EnumeratedMatching> enumerate_matchings(
    const TightEnvyGraph& graph) {
  std::size_t n = graph.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<EnumeratedMatching> out;
  do {
    bool ok = true;
    Rational product = 1;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!graph.edges[i][perm[i]]) {
        ok = false;
      } else {
        product *= graph.weights[i][perm[i]];
      }
    }
    if (ok) out.push_back({perm, product});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace rentfair::test

#endif  // RENTFAIR_TESTS_TEST_UTIL_HPP
