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

#ifndef RENTFAIR_IO_HPP
#define RENTFAIR_IO_HPP

#include <json.hpp>

#include <optional>
#include <string>

#include "rentfair/model.hpp"
#include "rentfair/solver.hpp"

namespace rentfair {

struct Instance {
  Economy economy;
  Objective objective;  // defaults to maxmin-utility over all agents
  bool objective_given = false;
};

struct ParsedInstance {
  std::optional<Instance> instance;
  std::vector<std::string> errors;  // parse and validation problems
};

/// Parses and validates an instance document. Rationals may appear as JSON
/// integers, decimal strings, or "p/q" strings; decimal strings are scaled
/// by powers of ten so nothing ever rounds. All problems are reported, not
/// just the first.
ParsedInstance parse_instance_text(const std::string& text);
ParsedInstance parse_instance_json(const nlohmann::json& doc);

nlohmann::json instance_to_json(const Instance& instance);

/// Exact rational parsing of one JSON value (integer, "p/q", or decimal
/// string). Throws std::invalid_argument on anything else, including JSON
/// floats, which would round.
Rational rational_from_json(const nlohmann::json& value);

nlohmann::json result_to_json(const Economy& economy,
                              const Objective& objective,
                              const SolveResult& result, bool include_trace);

/// Result document for an allocation that did not come from the iterative
/// path (oracle runs).
nlohmann::json allocation_to_json(const Economy& economy,
                                  const Objective& objective,
                                  const Allocation& alloc,
                                  const Rational& objective_value,
                                  bool certified);

/// Reads "assignment" and "rents" back from a result document; names must
/// match the economy. Throws std::invalid_argument on malformed input.
Allocation allocation_from_json(const Economy& economy,
                                const nlohmann::json& doc);

std::optional<ObjectiveFamily> family_from_name(const std::string& name);

/// Reads the "objective" object of a result or instance document against an
/// economy. Throws std::invalid_argument on malformed input.
Objective objective_from_json(const Economy& economy,
                              const nlohmann::json& doc);

nlohmann::json objective_to_json(const Economy& economy,
                                 const Objective& objective);

}  // namespace rentfair

#endif  // RENTFAIR_IO_HPP
