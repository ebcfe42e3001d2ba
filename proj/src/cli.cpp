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

#include "rentfair/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rentfair/bench.hpp"
#include "rentfair/envy.hpp"
#include "rentfair/gen.hpp"
#include "rentfair/io.hpp"
#include "rentfair/oracle.hpp"
#include "rentfair/solver.hpp"

namespace rentfair::cli {

using nlohmann::json;

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void report_violations(std::ostream& err,
                       const std::vector<std::string>& violations) {
  json doc;
  doc["violations"] = violations;
  err << doc.dump(2) << '\n';
}

int write_output(const json& doc, const std::optional<std::string>& path,
                 std::ostream& out, std::ostream& err) {
  if (!path) {
    out << doc.dump(2) << '\n';
    return kOk;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) {
    report_violations(err, {"cannot write to \"" + *path + "\""});
    return kValidation;
  }
  file << doc.dump(2) << '\n';
  return kOk;
}

// Loads and validates an instance file; on failure reports and returns the
// exit code to propagate.
std::optional<Instance> load_instance(const std::string& path,
                                      std::ostream& err, int& exit_code) {
  auto text = read_file(path);
  if (!text) {
    report_violations(err, {"cannot read \"" + path + "\""});
    exit_code = kValidation;
    return std::nullopt;
  }
  ParsedInstance parsed = parse_instance_text(*text);
  if (!parsed.instance) {
    report_violations(err, parsed.errors);
    exit_code = kValidation;
    return std::nullopt;
  }
  return std::move(parsed.instance);
}

std::size_t oracle_guard_from_env() {
  const char* raw = std::getenv("RENTFAIR_SIZE_GUARD");
  if (raw == nullptr) return kDefaultOracleGuard;
  char* end = nullptr;
  unsigned long value = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0') return kDefaultOracleGuard;
  return static_cast<std::size_t>(value);
}

}  // namespace

int cmd_solve(const SolveOptions& options, std::ostream& out,
              std::ostream& err) {
  int exit_code = kOk;
  auto instance = load_instance(options.instance_path, err, exit_code);
  if (!instance) return exit_code;

  Objective objective = instance->objective;
  if (options.require_nonnegative) {
    // The non-negativity question is answered by the maxmin-rent selection:
    // rents can all be nonnegative exactly when its value is.
    objective =
        Objective::full_scope(ObjectiveFamily::kMaxminRent,
                              instance->economy);
  } else if (options.objective_override) {
    auto family = family_from_name(*options.objective_override);
    if (!family) {
      report_violations(
          err, {"unknown objective family \"" + *options.objective_override +
                "\""});
      return kValidation;
    }
    objective = Objective::full_scope(*family, instance->economy);
  }

  try {
    SolveResult result = solve(instance->economy, objective);
    json doc = result_to_json(instance->economy, objective, result,
                              options.trace);
    if (options.require_nonnegative) {
      bool possible = !result.objective_value.is_negative();
      doc["nonnegative_rents"] = possible ? "possible" : "impossible";
    }
    return write_output(doc, options.output_path, out, err);
  } catch (const std::invalid_argument& ex) {
    report_violations(err, {ex.what()});
    return kValidation;
  }
}

int cmd_verify(const std::string& instance_path,
               const std::string& result_path, std::ostream& out,
               std::ostream& err) {
  int exit_code = kOk;
  auto instance = load_instance(instance_path, err, exit_code);
  if (!instance) return exit_code;

  auto result_text = read_file(result_path);
  if (!result_text) {
    report_violations(err, {"cannot read \"" + result_path + "\""});
    return kValidation;
  }
  json result_doc =
      json::parse(*result_text, nullptr, /*allow_exceptions=*/false);
  if (result_doc.is_discarded()) {
    report_violations(err, {"result is not valid JSON"});
    return kValidation;
  }

  const Economy& economy = instance->economy;
  Allocation alloc;
  Objective objective = instance->objective;
  try {
    alloc = allocation_from_json(economy, result_doc);
    // A result may have been solved under an overridden objective; trust
    // the one it records.
    if (result_doc.contains("objective"))
      objective = objective_from_json(economy, result_doc["objective"]);
  } catch (const std::invalid_argument& ex) {
    report_violations(err, {ex.what()});
    return kValidation;
  }

  json report;
  bool balanced = alloc.rent_sum() == economy.total_rent;
  report["budget_balanced"] = balanced;
  if (!balanced)
    report["budget_balance_gap"] =
        (alloc.rent_sum() - economy.total_rent).to_string();

  bool envy_free = true;
  if (auto witness = is_envy_free_at(economy, alloc, alloc.rent_sum())) {
    envy_free = false;
    report["envy_witness"] = {
        {"envious", economy.agent_names[witness->envious]},
        {"envied", economy.agent_names[witness->envied]},
        {"gap", witness->gap.to_string()}};
  }
  report["envy_free"] = envy_free;

  MembershipVerdict verdict = check_membership(economy, alloc, objective);
  report["member"] = verdict.member;
  const auto& scope_names = objective.scopes_agents() ? economy.agent_names
                                                      : economy.room_names;
  json unreached = json::array();
  for (std::size_t id : verdict.unreached)
    unreached.push_back(scope_names[id] + " unreached");
  report["unreached"] = unreached;

  bool ok = balanced && envy_free && verdict.member;
  report["ok"] = ok;
  out << report.dump(2) << '\n';
  return ok ? kOk : kInternal;
}

int cmd_oracle(const OracleOptions& options, std::ostream& out,
               std::ostream& err) {
  int exit_code = kOk;
  auto instance = load_instance(options.instance_path, err, exit_code);
  if (!instance) return exit_code;

  std::size_t guard = options.force ? instance->economy.size()
                                    : oracle_guard_from_env();
  try {
    OracleResult truth =
        oracle_solve(instance->economy, instance->objective, guard);
    json doc = allocation_to_json(instance->economy, instance->objective,
                                  truth.witness, truth.value,
                                  /*certified=*/true);
    return write_output(doc, options.output_path, out, err);
  } catch (const SizeGuardError& ex) {
    report_violations(err, {std::string("size guard: ") + ex.what()});
    return kSizeGuard;
  }
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  BudgetTightness tightness;
  if (options.budget_tightness == "low") {
    tightness = BudgetTightness::kLow;
  } else if (options.budget_tightness == "mid") {
    tightness = BudgetTightness::kMid;
  } else if (options.budget_tightness == "high") {
    tightness = BudgetTightness::kHigh;
  } else {
    report_violations(err, {"--budget-tightness must be low, mid, or high"});
    return kValidation;
  }
  if (options.n < 1 || options.k < 1) {
    report_violations(err, {"n and k must be at least 1"});
    return kValidation;
  }
  Instance inst =
      generate_instance(options.n, options.k, options.seed, tightness);
  return write_output(instance_to_json(inst), options.output_path, out, err);
}

int cmd_bench(const BenchOptions& options, std::ostream& out,
              std::ostream& err) {
  auto dots = options.n_range.find("..");
  std::size_t lo = 0, hi = 0;
  bool ok = dots != std::string::npos;
  if (ok) {
    try {
      lo = std::stoul(options.n_range.substr(0, dots));
      hi = std::stoul(options.n_range.substr(dots + 2));
    } catch (const std::exception&) {
      ok = false;
    }
  }
  if (!ok) {
    report_violations(err, {"--n-range must look like 2..6"});
    return kValidation;
  }
  std::vector<BenchRow> rows =
      lo > hi ? std::vector<BenchRow>{}
              : run_bench(lo, hi, options.k, options.trials, options.seed);
  out << bench_csv(rows);
  return kOk;
}

}  // namespace rentfair::cli
