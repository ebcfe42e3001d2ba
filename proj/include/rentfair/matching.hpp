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

#ifndef RENTFAIR_MATCHING_HPP
#define RENTFAIR_MATCHING_HPP

#include <vector>

#include "rentfair/envy.hpp"
#include "rentfair/model.hpp"

namespace rentfair {

enum class OptimizeSense { kMaximize, kMinimize };

/// Exact optimal assignment for an additive objective (Hungarian with
/// rational potentials). Ties are broken by the lexicographically smallest
/// assignment vector.
std::vector<std::size_t> optimal_assignment(
    const std::vector<std::vector<Rational>>& values, OptimizeSense sense);

struct MatchingResult {
  std::vector<std::size_t> assignment;
  std::vector<std::size_t> weight_exponents;  // per slope-set index, sums to n
  Rational product_weight;                    // product of (1 + rho_j)^e_j
};

/// Extremal perfect matching on a tight-envy graph, optimizing the product
/// of the slope weights over the graph's edges only. Products of positive
/// rationals compare exactly, so the Hungarian machinery runs in the
/// multiplicative group with no rounding anywhere. Ties are broken by the
/// lexicographically smallest assignment vector. Throws when the graph
/// admits no perfect matching (a non-envy-free rent vector upstream).
MatchingResult extremal_perfect_matching(const TightEnvyGraph& graph,
                                         const SlopeSet& slopes,
                                         OptimizeSense sense);

}  // namespace rentfair

#endif  // RENTFAIR_MATCHING_HPP
