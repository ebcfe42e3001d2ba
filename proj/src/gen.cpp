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

#include "rentfair/gen.hpp"

namespace rentfair {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw unbiased and deterministic.
  std::uint64_t limit = span == 0 ? 0 : UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = next();
  } while (span != 0 && limit != 0 && draw >= limit);
  return lo + static_cast<std::int64_t>(span == 0 ? draw : draw % span);
}

Instance generate_instance(std::size_t n, std::size_t k, std::uint64_t seed,
                           BudgetTightness tightness) {
  if (n < 1) throw std::invalid_argument("generate_instance: n must be >= 1");
  if (k < 1) throw std::invalid_argument("generate_instance: k must be >= 1");
  SplitMix64 rng(seed);

  Instance inst;
  Economy& e = inst.economy;
  for (std::size_t i = 0; i < n; ++i)
    e.agent_names.push_back("agent" + std::to_string(i + 1));
  for (std::size_t a = 0; a < n; ++a)
    e.room_names.push_back("room" + std::to_string(a + 1));

  for (std::size_t j = 0; j < k; ++j)
    e.slope_set.rhos.push_back(
        Rational(static_cast<long long>(j), 2));  // 0, 1/2, 1, ...

  std::int64_t total =
      rng.uniform(5 * static_cast<std::int64_t>(n),
                  50 * static_cast<std::int64_t>(n));
  e.total_rent = Rational(static_cast<long long>(total));
  // Final rents land within the value spread of total/n; position budgets
  // against that anchor.
  std::int64_t anchor = total / static_cast<std::int64_t>(n);

  e.prefs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Preference& p = e.prefs[i];
    for (std::size_t a = 0; a < n; ++a)
      p.values.push_back(Rational(static_cast<long long>(rng.uniform(0, 100))));
    std::int64_t budget = 0;
    switch (tightness) {
      case BudgetTightness::kLow:
        budget = anchor + rng.uniform(101, 200);
        break;
      case BudgetTightness::kMid:
        budget = anchor + rng.uniform(-20, 20);
        break;
      case BudgetTightness::kHigh:
        budget = rng.uniform(0, anchor > 40 ? anchor / 2 : 20);
        break;
    }
    if (budget < 0) budget = 0;
    p.budget = Rational(static_cast<long long>(budget));
    p.slope_index =
        static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(k) - 1));
  }

  inst.objective = Objective::full_scope(ObjectiveFamily::kMaxminUtility, e);
  inst.objective_given = true;
  return inst;
}

}  // namespace rentfair
