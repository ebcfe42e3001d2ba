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

#ifndef RENTFAIR_BENCH_HPP
#define RENTFAIR_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rentfair {

struct BenchRow {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t trial = 0;
  std::size_t iterations = 0;
  unsigned long long bound = 0;
  double wall_seconds = 0;
};

/// Solves seeded generated instances for every n in [n_lo, n_hi], cycling
/// through the four objective families and the three budget-tightness
/// regimes across trials, and records loop iterations against the iteration
/// budget. A row with iterations above the bound throws InternalError.
std::vector<BenchRow> run_bench(std::size_t n_lo, std::size_t n_hi,
                                std::size_t k, std::size_t trials,
                                std::uint64_t seed = 1);

/// Header plus one line per row: n,k,trial,iterations,bound,wall_time.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace rentfair

#endif  // RENTFAIR_BENCH_HPP
