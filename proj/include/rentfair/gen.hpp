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

#ifndef RENTFAIR_GEN_HPP
#define RENTFAIR_GEN_HPP

#include <cstdint>

#include "rentfair/io.hpp"

namespace rentfair {

/// How budgets sit relative to typical final rents: low tightness puts them
/// far above any reachable rent (no violated pair survives to the final
/// allocation), high pushes most rents over budget, mid straddles.
enum class BudgetTightness { kLow, kMid, kHigh };

/// splitmix64; fixed algorithm so generated instances are byte-identical
/// across platforms for one seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [lo, hi] (inclusive).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

/// Deterministic-by-seed instance: integer values in [0, 100], slope set
/// {0, 1/2, 1, ...} of size k, slope indices uniform, budgets placed by the
/// tightness regime, default maxmin-utility objective.
Instance generate_instance(std::size_t n, std::size_t k, std::uint64_t seed,
                           BudgetTightness tightness);

}  // namespace rentfair

#endif  // RENTFAIR_GEN_HPP
