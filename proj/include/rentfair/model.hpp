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

#ifndef RENTFAIR_MODEL_HPP
#define RENTFAIR_MODEL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rentfair/rational.hpp"

namespace rentfair {

// Thrown when an internal consistency check fails (iteration bounds,
// certificates, feasibility guaranteed by construction). Never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Fixed set of admissible budget-violation slopes. The first entry is always
/// 0 (quasi-linear) and entries are strictly increasing.
struct SlopeSet {
  std::vector<Rational> rhos;

  std::size_t size() const { return rhos.size(); }
};

/// One agent's preference: a money value per room, a soft budget, and an
/// index into the economy's slope set. Utility of bundle (r, a) is
///   v[a] - r - rho * max(0, r - budget).
struct Preference {
  std::vector<Rational> values;
  Rational budget;
  std::size_t slope_index = 0;
};

/// n agents, n rooms, one preference per agent, and the total rent to split.
struct Economy {
  std::vector<std::string> agent_names;
  std::vector<std::string> room_names;
  std::vector<Preference> prefs;
  SlopeSet slope_set;
  Rational total_rent;

  std::size_t size() const { return agent_names.size(); }
  const Rational& value(std::size_t agent, std::size_t room) const {
    return prefs[agent].values[room];
  }
  const Rational& budget(std::size_t agent) const {
    return prefs[agent].budget;
  }
  const Rational& rho(std::size_t agent) const {
    return slope_set.rhos[prefs[agent].slope_index];
  }
};

/// Room rents plus a bijection agent -> room. Whether the rents sum to a
/// given total is checked at use sites; solver iterates legitimately carry
/// totals other than the economy's.
struct Allocation {
  std::vector<Rational> rents;
  std::vector<std::size_t> assignment;  // assignment[agent] = room

  Rational rent_sum() const {
    Rational s;
    for (const auto& r : rents) s += r;
    return s;
  }
};

enum class ObjectiveFamily {
  kMaxminUtility,
  kMinmaxUtility,
  kMaxminRent,
  kMinmaxRent,
};

bool family_scopes_agents(ObjectiveFamily family);
std::string family_name(ObjectiveFamily family);

/// x -> intercept + slope * x with slope > 0.
struct AffineMap {
  Rational slope = 1;
  Rational intercept = 0;

  Rational operator()(const Rational& x) const {
    return intercept + slope * x;
  }
};

/// One of the four selection families, restricted to a nonempty scope of
/// agents (utility families) or rooms (rent families), each scope member
/// seen through its own positive affine transformation.
struct Objective {
  ObjectiveFamily family = ObjectiveFamily::kMaxminUtility;
  std::vector<std::size_t> scope;
  std::vector<AffineMap> maps;  // parallel to scope

  bool scopes_agents() const { return family_scopes_agents(family); }
  const AffineMap& map_for(std::size_t scope_pos) const {
    return maps[scope_pos];
  }

  static Objective full_scope(ObjectiveFamily family, const Economy& economy);
};

// ---------------------------------------------------------------------------
// Closed-form quantities.

/// u(r, room) = v - r - rho * max(0, r - budget). Throws on a room index
/// outside the preference's value table.
Rational utility(const Preference& pref, const SlopeSet& slopes,
                 const Rational& rent, std::size_t room);

Rational utility(const Economy& economy, std::size_t agent,
                 const Rational& rent, std::size_t room);

/// Utility of an agent's own bundle under an allocation.
Rational own_utility(const Economy& economy, const Allocation& alloc,
                     std::size_t agent);

/// V = (v + rho * b) / (1 + rho). For every rent r above the budget,
/// u(r, room) = (1 + rho) * (V - r) holds identically.
Rational linearized_value(const Preference& pref, const SlopeSet& slopes,
                          std::size_t room);

Rational linearized_value(const Economy& economy, std::size_t agent,
                          std::size_t room);

/// Pairs (agent, room) whose rent strictly exceeds the agent's budget.
/// Sorted lexicographically.
std::vector<std::pair<std::size_t, std::size_t>> sb_set(
    const Economy& economy, const std::vector<Rational>& rents);

/// Pairs (agent, room) with rent strictly below the agent's budget: the
/// surcharge-direction regime set (the complement of the inclusive kappa
/// regime).
std::vector<std::pair<std::size_t, std::size_t>> below_budget_set(
    const Economy& economy, const std::vector<Rational>& rents);

/// Left-side linearization at a rent vector: u(r', room) = nu - lambda * r'
/// for all r' in a small interval [r - eps, r].
struct LeftLine {
  Rational nu;
  Rational lambda;
  std::size_t slope_index = 0;  // index of lambda - 1 in the slope set
};

std::vector<std::vector<LeftLine>> nu_lambda(const Economy& economy,
                                             const std::vector<Rational>& rents);

/// Right-side slope at a rent vector: u(r', room) = const - kappa * r' for
/// all r' in a small interval [r, r + eps]. At the kink (r == budget) the
/// violated-regime slope applies.
std::vector<std::vector<Rational>> kappa(const Economy& economy,
                                         const std::vector<Rational>& rents);

/// Right-side linearization (intercept and slope); the slope column equals
/// kappa().
std::vector<std::vector<LeftLine>> nu_kappa(const Economy& economy,
                                            const std::vector<Rational>& rents);

/// A total rent high enough that every envy-free allocation for it sits above
/// every budget: n * (max pairwise spread of linearized values + max budget).
/// The pairwise spread over a single room is 0.
Rational high_rent_bound(const Economy& economy);

/// Symmetric low bound: n * (min budget - max(0, max pairwise value spread)).
/// Every envy-free allocation for a total at or below it has all rents at or
/// below every budget.
Rational low_rent_bound(const Economy& economy);

/// All invariant violations, not just the first. Empty means well-formed.
std::vector<std::string> validate(const Economy& economy);
std::vector<std::string> validate(const Economy& economy,
                                  const Objective& objective);

}  // namespace rentfair

#endif  // RENTFAIR_MODEL_HPP
