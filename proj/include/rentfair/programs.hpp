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

#ifndef RENTFAIR_PROGRAMS_HPP
#define RENTFAIR_PROGRAMS_HPP

#include <optional>
#include <vector>

#include "rentfair/envy.hpp"
#include "rentfair/lp.hpp"
#include "rentfair/model.hpp"

namespace rentfair {

/// The high-rent rebate families initialize above every budget and rebate
/// down; the low-rent surcharge families initialize below every budget and
/// charge up.
Direction direction_for(ObjectiveFamily family);

/// A built program plus its variable layout.
struct BuiltProgram {
  LinearProgram lp;
  std::optional<std::size_t> bound_var;  // the min/max bound variable R
  std::vector<std::size_t> rent_vars;    // one per room, in room order

  std::vector<Rational> rents_from(const LpSolution& sol) const {
    std::vector<Rational> out(rent_vars.size());
    for (std::size_t a = 0; a < rent_vars.size(); ++a)
      out[a] = sol.point[rent_vars[a]];
    return out;
  }
};

/// Boundary-rent equalization program. Rebate families bound R by the scoped
/// affine images of the linearized utilities (1+rho)(V - r) under quasi-linear
/// no-envy in V; surcharge families mirror it over the raw values, which are
/// exact at rents below every budget. Rents sum to `target_rent` exactly.
BuiltProgram build_init_lp(const Economy& economy, const Objective& objective,
                           const std::vector<std::size_t>& sigma,
                           const Rational& target_rent, Direction direction);

/// One rebate (surcharge) step: move rents down (up) toward the target under
/// the local linearization at `prev_rents`, keeping every budget regime from
/// the previous iterate.
BuiltProgram build_step_lp(
    const Economy& economy, const Objective& objective,
    const std::vector<std::size_t>& sigma,
    const std::vector<Rational>& prev_rents,
    const std::vector<std::pair<std::size_t, std::size_t>>& sb_prev,
    const Rational& target_rent, Direction direction);

/// Recovery program after a step overshoots its selection: move the rent sum
/// back (up for rebate, down for surcharge) as far as possible while keeping
/// the step value R_s and linearized no-envy. The linearization stays
/// anchored at `prev_rents`, the same anchor the step used.
BuiltProgram build_restore_lp(const Economy& economy,
                              const Objective& objective,
                              const std::vector<std::size_t>& sigma,
                              const std::vector<Rational>& prev_rents,
                              const std::vector<Rational>& step_rents,
                              const Rational& step_value, Direction direction);

/// Baseline rebate program: descend the rent sum by up to eta under the
/// linearization at `prev_rents` for a fixed matching, preserving budget
/// regimes. No selection objective; eta = 0 returns the previous rents.
BuiltProgram build_baseline_lp(const Economy& economy,
                             const std::vector<std::size_t>& sigma,
                             const std::vector<Rational>& prev_rents,
                             const Rational& eta);

}  // namespace rentfair

#endif  // RENTFAIR_PROGRAMS_HPP
