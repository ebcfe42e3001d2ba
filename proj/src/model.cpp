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

#include "rentfair/model.hpp"

#include <set>

namespace rentfair {

bool family_scopes_agents(ObjectiveFamily family) {
  return family == ObjectiveFamily::kMaxminUtility ||
         family == ObjectiveFamily::kMinmaxUtility;
}

std::string family_name(ObjectiveFamily family) {
  switch (family) {
    case ObjectiveFamily::kMaxminUtility: return "maxmin-utility";
    case ObjectiveFamily::kMinmaxUtility: return "minmax-utility";
    case ObjectiveFamily::kMaxminRent: return "maxmin-rent";
    case ObjectiveFamily::kMinmaxRent: return "minmax-rent";
  }
  return "unknown";
}

Objective Objective::full_scope(ObjectiveFamily family,
                                const Economy& economy) {
  Objective obj;
  obj.family = family;
  for (std::size_t i = 0; i < economy.size(); ++i) obj.scope.push_back(i);
  obj.maps.assign(economy.size(), AffineMap{});
  return obj;
}

Rational utility(const Preference& pref, const SlopeSet& slopes,
                 const Rational& rent, std::size_t room) {
  if (room >= pref.values.size())
    throw std::invalid_argument("utility: unknown room index");
  Rational u = pref.values[room] - rent;
  if (rent > pref.budget)
    u -= slopes.rhos[pref.slope_index] * (rent - pref.budget);
  return u;
}

Rational utility(const Economy& economy, std::size_t agent,
                 const Rational& rent, std::size_t room) {
  return utility(economy.prefs[agent], economy.slope_set, rent, room);
}

Rational own_utility(const Economy& economy, const Allocation& alloc,
                     std::size_t agent) {
  std::size_t room = alloc.assignment[agent];
  return utility(economy, agent, alloc.rents[room], room);
}

Rational linearized_value(const Preference& pref, const SlopeSet& slopes,
                          std::size_t room) {
  if (room >= pref.values.size())
    throw std::invalid_argument("linearized_value: unknown room index");
  const Rational& rho = slopes.rhos[pref.slope_index];
  return (pref.values[room] + rho * pref.budget) / (Rational(1) + rho);
}

Rational linearized_value(const Economy& economy, std::size_t agent,
                          std::size_t room) {
  return linearized_value(economy.prefs[agent], economy.slope_set, room);
}

std::vector<std::pair<std::size_t, std::size_t>> sb_set(
    const Economy& economy, const std::vector<Rational>& rents) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < economy.size(); ++i)
    for (std::size_t a = 0; a < economy.size(); ++a)
      if (rents[a] > economy.budget(i)) out.emplace_back(i, a);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> below_budget_set(
    const Economy& economy, const std::vector<Rational>& rents) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < economy.size(); ++i)
    for (std::size_t a = 0; a < economy.size(); ++a)
      if (rents[a] < economy.budget(i)) out.emplace_back(i, a);
  return out;
}

std::vector<std::vector<LeftLine>> nu_lambda(
    const Economy& economy, const std::vector<Rational>& rents) {
  std::size_t n = economy.size();
  std::vector<std::vector<LeftLine>> out(n, std::vector<LeftLine>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      if (rents[a] > economy.budget(i)) {
        out[i][a].nu = economy.value(i, a) + economy.rho(i) * economy.budget(i);
        out[i][a].lambda = Rational(1) + economy.rho(i);
        out[i][a].slope_index = economy.prefs[i].slope_index;
      } else {
        out[i][a].nu = economy.value(i, a);
        out[i][a].lambda = 1;
        out[i][a].slope_index = 0;
      }
    }
  }
  return out;
}

std::vector<std::vector<LeftLine>> nu_kappa(
    const Economy& economy, const std::vector<Rational>& rents) {
  std::size_t n = economy.size();
  std::vector<std::vector<LeftLine>> out(n, std::vector<LeftLine>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      // Inclusive at the kink: raising rent from r == budget enters the
      // violated regime, so the right derivative carries the penalty slope.
      if (rents[a] >= economy.budget(i)) {
        out[i][a].nu = economy.value(i, a) + economy.rho(i) * economy.budget(i);
        out[i][a].lambda = Rational(1) + economy.rho(i);
        out[i][a].slope_index = economy.prefs[i].slope_index;
      } else {
        out[i][a].nu = economy.value(i, a);
        out[i][a].lambda = 1;
        out[i][a].slope_index = 0;
      }
    }
  }
  return out;
}

std::vector<std::vector<Rational>> kappa(const Economy& economy,
                                         const std::vector<Rational>& rents) {
  auto lines = nu_kappa(economy, rents);
  std::size_t n = economy.size();
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) out[i][a] = lines[i][a].lambda;
  return out;
}

namespace {

// Largest V[i][b] - V[i][a] over agents and room pairs; 0 when there is a
// single room (the pair set is empty).
Rational max_pairwise_spread(const Economy& economy,
                             const std::vector<std::vector<Rational>>& table) {
  Rational spread = 0;
  if (economy.size() < 2) return spread;
  bool first = true;
  for (std::size_t i = 0; i < economy.size(); ++i) {
    for (std::size_t a = 0; a < economy.size(); ++a) {
      for (std::size_t b = 0; b < economy.size(); ++b) {
        if (a == b) continue;
        Rational d = table[i][b] - table[i][a];
        if (first || d > spread) {
          spread = d;
          first = false;
        }
      }
    }
  }
  return spread;
}

}  // namespace

Rational high_rent_bound(const Economy& economy) {
  std::size_t n = economy.size();
  std::vector<std::vector<Rational>> v(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      v[i][a] = linearized_value(economy, i, a);
  Rational max_budget = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (i == 0 || economy.budget(i) > max_budget)
      max_budget = economy.budget(i);
  return Rational(static_cast<long long>(n)) *
         (max_pairwise_spread(economy, v) + max_budget);
}

Rational low_rent_bound(const Economy& economy) {
  std::size_t n = economy.size();
  std::vector<std::vector<Rational>> v(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) v[i][a] = economy.value(i, a);
  Rational delta = max(Rational(0), max_pairwise_spread(economy, v));
  Rational min_budget = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (i == 0 || economy.budget(i) < min_budget)
      min_budget = economy.budget(i);
  return Rational(static_cast<long long>(n)) * (min_budget - delta);
}

std::vector<std::string> validate(const Economy& economy) {
  std::vector<std::string> out;
  std::size_t n = economy.agent_names.size();
  if (n == 0) out.push_back("economy must have at least one agent");
  if (economy.room_names.size() != n)
    out.push_back("agent/room count mismatch");
  if (economy.prefs.size() != n)
    out.push_back("one preference required per agent");

  const auto& rhos = economy.slope_set.rhos;
  if (rhos.empty()) {
    out.push_back("slope set must not be empty");
  } else {
    if (!rhos.front().is_zero()) out.push_back("slope set must contain 0");
    for (std::size_t j = 0; j < rhos.size(); ++j) {
      if (rhos[j].is_negative())
        out.push_back("slope set entries must be nonnegative");
      if (j > 0 && !(rhos[j - 1] < rhos[j])) {
        out.push_back("slope set entries must be strictly increasing");
        break;
      }
    }
  }

  for (std::size_t i = 0; i < economy.prefs.size(); ++i) {
    const Preference& p = economy.prefs[i];
    if (p.values.size() != economy.room_names.size())
      out.push_back("agent " + std::to_string(i) +
                    ": one value required per room");
    if (p.budget.is_negative())
      out.push_back("agent " + std::to_string(i) +
                    ": budget must be nonnegative");
    if (p.slope_index >= rhos.size())
      out.push_back("agent " + std::to_string(i) +
                    ": slope index outside the slope set");
  }

  std::set<std::string> agent_seen(economy.agent_names.begin(),
                                   economy.agent_names.end());
  if (agent_seen.size() != economy.agent_names.size())
    out.push_back("agent ids must be distinct");
  std::set<std::string> room_seen(economy.room_names.begin(),
                                  economy.room_names.end());
  if (room_seen.size() != economy.room_names.size())
    out.push_back("room ids must be distinct");
  return out;
}

std::vector<std::string> validate(const Economy& economy,
                                  const Objective& objective) {
  std::vector<std::string> out = validate(economy);
  if (objective.scope.empty())
    out.push_back("objective scope must be nonempty");
  std::size_t limit = economy.size();
  std::set<std::size_t> seen;
  for (std::size_t id : objective.scope) {
    if (id >= limit) out.push_back("objective scope id out of range");
    if (!seen.insert(id).second)
      out.push_back("objective scope ids must be distinct");
  }
  if (objective.maps.size() != objective.scope.size())
    out.push_back("objective needs one affine map per scope member");
  for (const AffineMap& m : objective.maps)
    if (!m.slope.is_positive())
      out.push_back("affine slope must be positive");
  return out;
}

}  // namespace rentfair
