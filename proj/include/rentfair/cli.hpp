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

#ifndef RENTFAIR_CLI_HPP
#define RENTFAIR_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace rentfair::cli {

// Stable exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kValidation = 2;
inline constexpr int kSizeGuard = 3;

struct SolveOptions {
  std::string instance_path;
  std::optional<std::string> objective_override;  // family name
  bool trace = false;
  std::optional<std::string> output_path;
  bool require_nonnegative = false;
};

int cmd_solve(const SolveOptions& options, std::ostream& out,
              std::ostream& err);

int cmd_verify(const std::string& instance_path,
               const std::string& result_path, std::ostream& out,
               std::ostream& err);

struct OracleOptions {
  std::string instance_path;
  bool force = false;
  std::optional<std::string> output_path;
};

int cmd_oracle(const OracleOptions& options, std::ostream& out,
               std::ostream& err);

struct GenOptions {
  std::size_t n = 2;
  std::size_t k = 2;
  std::uint64_t seed = 1;
  std::string budget_tightness = "mid";  // low | mid | high
  std::optional<std::string> output_path;
};

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::string n_range = "2..4";  // "lo..hi"
  std::size_t k = 2;
  std::size_t trials = 5;
  std::uint64_t seed = 1;
};

int cmd_bench(const BenchOptions& options, std::ostream& out,
              std::ostream& err);

}  // namespace rentfair::cli

#endif  // RENTFAIR_CLI_HPP
