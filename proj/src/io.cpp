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

#include "rentfair/io.hpp"

#include <algorithm>

namespace rentfair {

using nlohmann::json;

Rational rational_from_json(const json& value) {
  if (value.is_number_integer())
    return Rational(static_cast<long long>(value.get<std::int64_t>()));
  if (value.is_number_unsigned()) {
    BigInt big = value.get<std::uint64_t>();
    return Rational(big);
  }
  if (value.is_string())
    return Rational::from_string(value.get<std::string>());
  if (value.is_number_float())
    throw std::invalid_argument(
        "decimal values must be strings so they stay exact");
  throw std::invalid_argument("expected a rational (integer or string)");
}

std::optional<ObjectiveFamily> family_from_name(const std::string& name) {
  if (name == "maxmin-utility") return ObjectiveFamily::kMaxminUtility;
  if (name == "minmax-utility") return ObjectiveFamily::kMinmaxUtility;
  if (name == "maxmin-rent") return ObjectiveFamily::kMaxminRent;
  if (name == "minmax-rent") return ObjectiveFamily::kMinmaxRent;
  return std::nullopt;
}

namespace {

std::string id_from_json(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer() || value.is_number_unsigned())
    return json(value).dump();
  throw std::invalid_argument("ids must be strings or integers");
}

std::optional<std::size_t> index_of(const std::vector<std::string>& names,
                                    const std::string& id) {
  auto it = std::find(names.begin(), names.end(), id);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

Objective objective_from_json(const Economy& economy, const json& doc) {
  if (!doc.is_object())
    throw std::invalid_argument("objective must be an object");
  Objective obj;
  std::string fam = doc.value("family", std::string("maxmin-utility"));
  auto family = family_from_name(fam);
  if (!family)
    throw std::invalid_argument("unknown objective family \"" + fam + "\"");
  obj.family = *family;

  const auto& names =
      obj.scopes_agents() ? economy.agent_names : economy.room_names;
  if (doc.contains("scope")) {
    if (!doc["scope"].is_array())
      throw std::invalid_argument("objective scope must be an array of ids");
    for (const json& raw : doc["scope"]) {
      std::string id = id_from_json(raw);
      auto idx = index_of(names, id);
      if (!idx)
        throw std::invalid_argument("objective scope id \"" + id +
                                    "\" is not in the instance");
      obj.scope.push_back(*idx);
    }
  } else {
    for (std::size_t i = 0; i < names.size(); ++i) obj.scope.push_back(i);
  }

  if (doc.contains("affine")) {
    if (!doc["affine"].is_array() ||
        doc["affine"].size() != obj.scope.size())
      throw std::invalid_argument(
          "objective affine list must match the scope length");
    for (const json& raw : doc["affine"]) {
      AffineMap map;
      if (raw.contains("slope")) map.slope = rational_from_json(raw["slope"]);
      if (raw.contains("intercept"))
        map.intercept = rational_from_json(raw["intercept"]);
      obj.maps.push_back(map);
    }
  } else {
    obj.maps.assign(obj.scope.size(), AffineMap{});
  }
  return obj;
}

json objective_to_json(const Economy& economy, const Objective& objective) {
  json out;
  out["family"] = family_name(objective.family);
  const auto& names = objective.scopes_agents() ? economy.agent_names
                                                : economy.room_names;
  json scope = json::array();
  for (std::size_t id : objective.scope) scope.push_back(names[id]);
  out["scope"] = scope;
  json affine = json::array();
  for (const AffineMap& map : objective.maps)
    affine.push_back({{"slope", map.slope.to_string()},
                      {"intercept", map.intercept.to_string()}});
  out["affine"] = affine;
  return out;
}

ParsedInstance parse_instance_text(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded())
    return {std::nullopt, {"instance is not valid JSON"}};
  return parse_instance_json(doc);
}

ParsedInstance parse_instance_json(const json& doc) {
  ParsedInstance out;
  std::vector<std::string>& errors = out.errors;
  if (!doc.is_object()) {
    errors.push_back("instance must be a JSON object");
    return out;
  }

  Instance inst;
  Economy& e = inst.economy;

  auto read_ids = [&](const char* key, std::vector<std::string>& into) {
    if (!doc.contains(key) || !doc[key].is_array()) {
      errors.push_back(std::string("\"") + key + "\" must be an array");
      return;
    }
    for (const json& raw : doc[key]) {
      try {
        into.push_back(id_from_json(raw));
      } catch (const std::invalid_argument& ex) {
        errors.push_back(std::string(key) + ": " + ex.what());
      }
    }
  };
  read_ids("agents", e.agent_names);
  read_ids("rooms", e.room_names);

  auto read_rational = [&](const json& raw, const std::string& where,
                           Rational& into) {
    try {
      into = rational_from_json(raw);
    } catch (const std::invalid_argument& ex) {
      errors.push_back(where + ": " + ex.what());
    }
  };

  if (doc.contains("slope_set") && doc["slope_set"].is_array()) {
    for (std::size_t j = 0; j < doc["slope_set"].size(); ++j) {
      Rational rho;
      read_rational(doc["slope_set"][j], "slope_set", rho);
      e.slope_set.rhos.push_back(rho);
    }
  } else {
    errors.push_back("\"slope_set\" must be an array");
  }

  std::size_t n = e.agent_names.size();
  e.prefs.resize(n);

  if (doc.contains("values") && doc["values"].is_array() &&
      doc["values"].size() == n) {
    for (std::size_t i = 0; i < n; ++i) {
      const json& row = doc["values"][i];
      if (!row.is_array() || row.size() != e.room_names.size()) {
        errors.push_back("values row " + std::to_string(i) +
                         " must list one value per room");
        continue;
      }
      e.prefs[i].values.resize(row.size());
      for (std::size_t a = 0; a < row.size(); ++a)
        read_rational(row[a], "values", e.prefs[i].values[a]);
    }
  } else {
    errors.push_back("\"values\" must be a matrix with one row per agent");
  }

  if (doc.contains("budgets") && doc["budgets"].is_array() &&
      doc["budgets"].size() == n) {
    for (std::size_t i = 0; i < n; ++i)
      read_rational(doc["budgets"][i], "budgets", e.prefs[i].budget);
  } else {
    errors.push_back("\"budgets\" must list one budget per agent");
  }

  if (doc.contains("rho_index") && doc["rho_index"].is_array() &&
      doc["rho_index"].size() == n) {
    for (std::size_t i = 0; i < n; ++i) {
      const json& raw = doc["rho_index"][i];
      if (raw.is_number_unsigned() || (raw.is_number_integer() &&
                                       raw.get<std::int64_t>() >= 0)) {
        e.prefs[i].slope_index = raw.get<std::uint64_t>();
      } else {
        errors.push_back("rho_index entries must be nonnegative integers");
      }
    }
  } else {
    errors.push_back("\"rho_index\" must list one slope index per agent");
  }

  if (doc.contains("total_rent")) {
    read_rational(doc["total_rent"], "total_rent", e.total_rent);
  } else {
    errors.push_back("\"total_rent\" is required");
  }

  if (!errors.empty()) return out;

  if (doc.contains("objective")) {
    try {
      inst.objective = objective_from_json(e, doc["objective"]);
      inst.objective_given = true;
    } catch (const std::invalid_argument& ex) {
      errors.push_back(ex.what());
      return out;
    }
  } else {
    inst.objective =
        Objective::full_scope(ObjectiveFamily::kMaxminUtility, e);
  }

  for (std::string& problem : validate(e, inst.objective))
    errors.push_back(std::move(problem));
  if (!errors.empty()) return out;

  out.instance = std::move(inst);
  return out;
}

json instance_to_json(const Instance& instance) {
  const Economy& e = instance.economy;
  json out;
  out["agents"] = e.agent_names;
  out["rooms"] = e.room_names;
  json slopes = json::array();
  for (const Rational& rho : e.slope_set.rhos)
    slopes.push_back(rho.to_string());
  out["slope_set"] = slopes;
  json values = json::array();
  json budgets = json::array();
  json rho_index = json::array();
  for (const Preference& p : e.prefs) {
    json row = json::array();
    for (const Rational& v : p.values) row.push_back(v.to_string());
    values.push_back(row);
    budgets.push_back(p.budget.to_string());
    rho_index.push_back(p.slope_index);
  }
  out["values"] = values;
  out["budgets"] = budgets;
  out["rho_index"] = rho_index;
  out["total_rent"] = e.total_rent.to_string();
  out["objective"] = objective_to_json(e, instance.objective);
  return out;
}

namespace {

json rent_map(const Economy& economy, const std::vector<Rational>& rents) {
  json out;
  for (std::size_t a = 0; a < rents.size(); ++a)
    out[economy.room_names[a]] = rents[a].to_string();
  return out;
}

json assignment_map(const Economy& economy,
                    const std::vector<std::size_t>& assignment) {
  json out;
  for (std::size_t i = 0; i < assignment.size(); ++i)
    out[economy.agent_names[i]] = economy.room_names[assignment[i]];
  return out;
}

json base_result(const Economy& economy, const Objective& objective,
                 const Allocation& alloc, const Rational& objective_value,
                 bool certified) {
  json out;
  out["assignment"] = assignment_map(economy, alloc.assignment);
  out["rents"] = rent_map(economy, alloc.rents);
  json utilities;
  for (std::size_t i = 0; i < economy.size(); ++i)
    utilities[economy.agent_names[i]] =
        own_utility(economy, alloc, i).to_string();
  out["utilities"] = utilities;
  out["objective"] = objective_to_json(economy, objective);
  out["objective_value"] = objective_value.to_string();
  out["certified"] = certified;
  return out;
}

}  // namespace

json allocation_to_json(const Economy& economy, const Objective& objective,
                        const Allocation& alloc,
                        const Rational& objective_value, bool certified) {
  return base_result(economy, objective, alloc, objective_value, certified);
}

json result_to_json(const Economy& economy, const Objective& objective,
                    const SolveResult& result, bool include_trace) {
  json out = base_result(economy, objective, result.allocation,
                         result.objective_value, result.certified);
  if (!include_trace) return out;
  const auto& scope_names = objective.scopes_agents() ? economy.agent_names
                                                      : economy.room_names;

  json trace;
  trace["boundary_rent"] = result.trace.boundary_rent.to_string();
  trace["init"] = {
      {"rents", rent_map(economy, result.trace.init_allocation.rents)},
      {"assignment",
       assignment_map(economy, result.trace.init_allocation.assignment)}};
  json iterations = json::array();
  for (const IterationRecord& rec : result.trace.iterations) {
    json it;
    it["s"] = rec.s;
    it["assignment"] = assignment_map(economy, rec.sigma);
    it["weight_exponents"] = rec.weight_exponents;
    it["matching_weight"] = rec.matching_weight.to_string();
    it["step_rents"] = rent_map(economy, rec.step_rents);
    it["step_value"] = rec.step_value.to_string();
    it["member"] = rec.membership.member;
    json unreached = json::array();
    for (std::size_t id : rec.membership.unreached)
      unreached.push_back(scope_names[id]);
    it["unreached"] = unreached;
    if (rec.restore_rents)
      it["restore_rents"] = rent_map(economy, *rec.restore_rents);
    it["sb_size_after"] = rec.sb_size_after;
    iterations.push_back(std::move(it));
  }
  trace["iterations"] = std::move(iterations);
  out["trace"] = std::move(trace);
  return out;
}

Allocation allocation_from_json(const Economy& economy, const json& doc) {
  if (!doc.is_object() || !doc.contains("assignment") ||
      !doc.contains("rents"))
    throw std::invalid_argument(
        "result must carry \"assignment\" and \"rents\" objects");
  std::size_t n = economy.size();
  Allocation alloc;
  alloc.rents.assign(n, Rational(0));
  alloc.assignment.assign(n, 0);

  const json& rents = doc["rents"];
  if (!rents.is_object() || rents.size() != n)
    throw std::invalid_argument("result rents must map every room");
  for (std::size_t a = 0; a < n; ++a) {
    const std::string& room = economy.room_names[a];
    if (!rents.contains(room))
      throw std::invalid_argument("result rents miss room \"" + room + "\"");
    alloc.rents[a] = rational_from_json(rents[room]);
  }

  const json& assignment = doc["assignment"];
  if (!assignment.is_object() || assignment.size() != n)
    throw std::invalid_argument("result assignment must map every agent");
  std::vector<bool> taken(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& agent = economy.agent_names[i];
    if (!assignment.contains(agent))
      throw std::invalid_argument("result assignment misses agent \"" +
                                  agent + "\"");
    auto room = index_of(economy.room_names,
                         id_from_json(assignment[agent]));
    if (!room)
      throw std::invalid_argument("result assigns an unknown room");
    if (taken[*room])
      throw std::invalid_argument("result assigns a room twice");
    taken[*room] = true;
    alloc.assignment[i] = *room;
  }
  return alloc;
}

}  // namespace rentfair
