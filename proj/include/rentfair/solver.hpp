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

#ifndef RENTFAIR_SOLVER_HPP
#define RENTFAIR_SOLVER_HPP

#include <optional>
#include <vector>

#include "rentfair/envy.hpp"
#include "rentfair/model.hpp"

namespace rentfair {

struct IterationRecord {
  std::size_t s = 0;
  std::vector<std::size_t> sigma;
  std::vector<std::size_t> weight_exponents;
  Rational matching_weight;
  std::vector<Rational> step_rents;
  Rational step_value;  // R_s
  MembershipVerdict membership;
  std::optional<std::vector<Rational>> restore_rents;
  // Size of the direction's regime set at the adopted rents: budget
  // violations while rebating, strictly-below-budget pairs while charging.
  std::size_t sb_size_after = 0;
};

struct SolveTrace {
  Rational boundary_rent;
  Allocation init_allocation;
  std::vector<IterationRecord> iterations;
  Allocation final_allocation;
  Rational objective_value;
};

struct SolveResult {
  Allocation allocation;
  Rational objective_value;
  SolveTrace trace;
  bool certified = false;
};

/// Loop-iteration budget n^2 * (n+1)^(k-1) + 2: budget-regime releases times
/// the number of distinct matching weights, plus the closing step. Exceeding
/// it is an internal bug, never an input property.
unsigned long long iteration_bound(std::size_t n, std::size_t k);

/// Boundary-rent initialization: rebate families solve at max(m, high
/// bound) with the assignment maximizing the linearized values; surcharge
/// families solve at min(m, low bound) with the assignment maximizing raw
/// values. The returned allocation is in the target selection at the
/// returned total.
std::pair<Rational, Allocation> initialize(const Economy& economy,
                                           const Objective& objective);

/// Full run: initialize, then iterate extremal matching + step program +
/// membership check (+ recovery program on failure) until the rent sum hits
/// the economy total exactly. The output is re-verified (envy-free, exact
/// budget balance, selection membership) before certified is set.
SolveResult solve(const Economy& economy, const Objective& objective);

/// Baseline: initialize high, then descend with the plain rebate program
/// (no selection objective), recomputing the maximum-weight matching between
/// solves. Envy-free at the economy total; lands anywhere in the envy-free
/// set.
Allocation rebate_baseline(const Economy& economy);

/// Maxmin utility restricted to a single agent: the envy-free allocation
/// this agent likes best.
SolveResult best_for_agent(const Economy& economy, std::size_t agent);

}  // namespace rentfair

#endif  // RENTFAIR_SOLVER_HPP
