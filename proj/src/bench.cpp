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

#include "rentfair/bench.hpp"

#include <chrono>
#include <sstream>

#include "rentfair/gen.hpp"
#include "rentfair/solver.hpp"

namespace rentfair {

std::vector<BenchRow> run_bench(std::size_t n_lo, std::size_t n_hi,
                                std::size_t k, std::size_t trials,
                                std::uint64_t seed) {
  static constexpr ObjectiveFamily kFamilies[] = {
      ObjectiveFamily::kMaxminUtility, ObjectiveFamily::kMinmaxUtility,
      ObjectiveFamily::kMaxminRent, ObjectiveFamily::kMinmaxRent};
  static constexpr BudgetTightness kRegimes[] = {
      BudgetTightness::kMid, BudgetTightness::kHigh, BudgetTightness::kLow};

  std::vector<BenchRow> rows;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    for (std::size_t trial = 0; trial < trials; ++trial) {
      std::uint64_t instance_seed =
          seed * 1000003ULL + n * 10007ULL + trial * 101ULL;
      Instance inst =
          generate_instance(n, k, instance_seed, kRegimes[trial % 3]);
      Objective objective = Objective::full_scope(
          kFamilies[trial % 4], inst.economy);

      auto start = std::chrono::steady_clock::now();
      SolveResult result = solve(inst.economy, objective);
      auto stop = std::chrono::steady_clock::now();

      BenchRow row;
      row.n = n;
      row.k = k;
      row.trial = trial;
      row.iterations = result.trace.iterations.size();
      row.bound = iteration_bound(n, k);
      row.wall_seconds =
          std::chrono::duration<double>(stop - start).count();
      if (row.iterations > row.bound)
        throw InternalError("bench: iteration budget exceeded at n=" +
                            std::to_string(n));
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,k,trial,iterations,bound,wall_time\n";
  for (const BenchRow& row : rows) {
    out << row.n << ',' << row.k << ',' << row.trial << ','
        << row.iterations << ',' << row.bound << ',' << row.wall_seconds
        << '\n';
  }
  return out.str();
}

}  // namespace rentfair
