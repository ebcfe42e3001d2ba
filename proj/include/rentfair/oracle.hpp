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

#ifndef RENTFAIR_ORACLE_HPP
#define RENTFAIR_ORACLE_HPP

#include "rentfair/model.hpp"

namespace rentfair {

class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultOracleGuard = 5;

struct OracleResult {
  Rational value;
  Allocation witness;
};

/// Ground truth by exhaustion: enumerate every assignment and every
/// budget-regime cell (a closed interval between consecutive distinct
/// budgets per room, extended to -inf and +inf at the ends), solve the exact
/// linear program of each cell, and keep the best. Every utility is affine
/// inside a cell, and adjacent cells overlap at the budget breakpoints where
/// both affine forms agree, so no kink optimum can escape. Deliberately
/// shares nothing with the solver path beyond the simplex. Cost is
/// factorial; refuses economies larger than `guard` agents.
OracleResult oracle_solve(const Economy& economy, const Objective& objective,
                          std::size_t guard = kDefaultOracleGuard);

/// True when the allocation is envy-free, balances the economy's budget,
/// and matches the oracle optimum exactly.
bool oracle_is_optimal(const Economy& economy, const Objective& objective,
                       const Allocation& alloc,
                       std::size_t guard = kDefaultOracleGuard);

}  // namespace rentfair

#endif  // RENTFAIR_ORACLE_HPP
