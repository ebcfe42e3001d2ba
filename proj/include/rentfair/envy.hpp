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

#ifndef RENTFAIR_ENVY_HPP
#define RENTFAIR_ENVY_HPP

#include <optional>
#include <vector>

#include "rentfair/model.hpp"

namespace rentfair {

/// Which way rents are about to move. The rebate direction linearizes with
/// the left slope lambda, the surcharge direction with the right slope kappa.
enum class Direction { kRebate, kSurcharge };

/// Bipartite agent-room graph of utility-maximal bundles at a rent vector.
/// Edge (i, a) is present exactly when room a maximizes agent i's utility at
/// these rents; weights carry the direction's local slope.
struct TightEnvyGraph {
  Direction direction = Direction::kRebate;
  std::vector<std::vector<bool>> edges;
  std::vector<std::vector<Rational>> weights;
  std::vector<std::vector<std::size_t>> slope_indices;

  std::size_t size() const { return edges.size(); }
};

TightEnvyGraph tight_graph(const Economy& economy,
                           const std::vector<Rational>& rents,
                           Direction direction);

struct EnvyWitness {
  std::size_t envious = 0;
  std::size_t envied = 0;
  Rational gap;  // > 0
};

/// nullopt when no agent prefers another agent's bundle; otherwise a witness
/// with the largest gap (smallest agent pair on ties). Throws when the rents
/// do not sum to `total`.
std::optional<EnvyWitness> is_envy_free_at(const Economy& economy,
                                           const Allocation& alloc,
                                           const Rational& total);

/// Same, with the economy's own total rent.
std::optional<EnvyWitness> is_envy_free(const Economy& economy,
                                        const Allocation& alloc);

/// The argmin (maxmin families) or argmax (minmax families) of the scoped
/// objective terms at an allocation; exact ties are all included.
std::vector<std::size_t> extreme_set(const Allocation& alloc,
                                     const Economy& economy,
                                     const Objective& objective);

/// min / max over the scope of f_i(utility) or g_a(rent), per family.
Rational objective_value(const Economy& economy, const Allocation& alloc,
                         const Objective& objective);

struct MembershipVerdict {
  bool member = false;
  std::vector<std::size_t> extreme;
  std::vector<std::size_t> unreached;  // empty iff member, given envy-freeness
};

/// Certifies that an envy-free allocation is extremal for its selection
/// family at its own rent total, via reachability in the indifference
/// digraph: agents (or rooms) must connect to the extreme set, toward it for
/// maxmin-utility and minmax-rent, from it for the two mirrored families.
/// Non-envy-free input yields member = false with the envious agent (or its
/// room) reported as unreached.
MembershipVerdict check_membership(const Economy& economy,
                                   const Allocation& alloc,
                                   const Objective& objective);

}  // namespace rentfair

#endif  // RENTFAIR_ENVY_HPP
