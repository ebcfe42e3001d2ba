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

#ifndef RENTFAIR_LP_HPP
#define RENTFAIR_LP_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rentfair/rational.hpp"

namespace rentfair {

enum class Relation { kLessEq, kGreaterEq, kEqual };
enum class LpSense { kMaximize, kMinimize };

using LinearForm = std::vector<std::pair<std::size_t, Rational>>;

struct LpConstraint {
  LinearForm form;
  Relation relation = Relation::kLessEq;
  Rational rhs;
  std::string label;
};

enum class LexDirection { kMinimize, kMaximize };

/// A linear program over free (sign-unrestricted) variables. `lex_vars`
/// optionally names variables to refine degenerate optima: among all optimal
/// points the solver returns the one that lexicographically minimizes
/// (maximizes) them, per `lex_direction`.
struct LinearProgram {
  std::vector<std::string> var_names;
  LpSense sense = LpSense::kMaximize;
  LinearForm objective;
  std::vector<LpConstraint> constraints;
  std::string tag;
  std::vector<std::size_t> lex_vars;
  LexDirection lex_direction = LexDirection::kMinimize;

  std::size_t add_variable(std::string name) {
    var_names.push_back(std::move(name));
    return var_names.size() - 1;
  }
  LpConstraint& add_constraint(LinearForm form, Relation relation,
                               Rational rhs, std::string label = "") {
    constraints.push_back(
        {std::move(form), relation, std::move(rhs), std::move(label)});
    return constraints.back();
  }

  // All violations of internal consistency (undeclared variables, affine
  // map slots, ...). Empty means well-formed.
  std::vector<std::string> check() const;

  // Plain-text rendering with exact "p/q" coefficients, for debugging.
  std::string dump() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> point;
  Rational value;
};

/// Exact two-phase simplex with Bland's anti-cycling pivot rule. Optimal
/// solutions are certified before being returned: the point is re-checked
/// against every constraint and optimality is re-derived from exact dual
/// feasibility of the final basis; a failed certificate throws InternalError.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace rentfair

#endif  // RENTFAIR_LP_HPP
