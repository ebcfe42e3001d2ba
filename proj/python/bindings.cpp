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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "rentfair/envy.hpp"
#include "rentfair/gen.hpp"
#include "rentfair/io.hpp"
#include "rentfair/oracle.hpp"
#include "rentfair/solver.hpp"

namespace py = pybind11;

namespace {

using namespace rentfair;
using nlohmann::json;

Instance parse_or_throw(const std::string& text) {
  ParsedInstance parsed = parse_instance_text(text);
  if (!parsed.instance) {
    std::string msg = "invalid instance:";
    for (const auto& e : parsed.errors) msg += " " + e + ";";
    throw std::invalid_argument(msg);
  }
  return std::move(*parsed.instance);
}

Objective resolve_objective(const Instance& instance,
                            const std::optional<std::string>& family) {
  if (!family) return instance.objective;
  auto parsed = family_from_name(*family);
  if (!parsed)
    throw std::invalid_argument("unknown objective family \"" + *family +
                                "\"");
  return Objective::full_scope(*parsed, instance.economy);
}

std::string solve_instance(const std::string& instance_json,
                           const std::optional<std::string>& family,
                           bool include_trace) {
  Instance instance = parse_or_throw(instance_json);
  Objective objective = resolve_objective(instance, family);
  SolveResult result = solve(instance.economy, objective);
  return result_to_json(instance.economy, objective, result, include_trace)
      .dump();
}

std::string oracle_instance(const std::string& instance_json,
                            std::size_t guard) {
  Instance instance = parse_or_throw(instance_json);
  OracleResult truth =
      oracle_solve(instance.economy, instance.objective, guard);
  return allocation_to_json(instance.economy, instance.objective,
                            truth.witness, truth.value, /*certified=*/true)
      .dump();
}

std::string verify_instance(const std::string& instance_json,
                            const std::string& result_json) {
  Instance instance = parse_or_throw(instance_json);
  const Economy& economy = instance.economy;
  json result_doc = json::parse(result_json, nullptr, false);
  if (result_doc.is_discarded())
    throw std::invalid_argument("result is not valid JSON");
  Allocation alloc = allocation_from_json(economy, result_doc);
  Objective objective = instance.objective;
  if (result_doc.contains("objective"))
    objective = objective_from_json(economy, result_doc["objective"]);

  json report;
  bool balanced = alloc.rent_sum() == economy.total_rent;
  bool envy_free =
      !is_envy_free_at(economy, alloc, alloc.rent_sum()).has_value();
  MembershipVerdict verdict = check_membership(economy, alloc, objective);
  report["budget_balanced"] = balanced;
  report["envy_free"] = envy_free;
  report["member"] = verdict.member;
  report["ok"] = balanced && envy_free && verdict.member;
  return report.dump();
}

std::string baseline_instance(const std::string& instance_json) {
  Instance instance = parse_or_throw(instance_json);
  Allocation alloc = rebate_baseline(instance.economy);
  Objective objective = instance.objective;
  return allocation_to_json(instance.economy, objective, alloc,
                            objective_value(instance.economy, alloc,
                                            objective),
                            /*certified=*/false)
      .dump();
}

std::string generate_instance_json(std::size_t n, std::size_t k,
                                   std::uint64_t seed,
                                   const std::string& tightness) {
  BudgetTightness mode;
  if (tightness == "low") {
    mode = BudgetTightness::kLow;
  } else if (tightness == "mid") {
    mode = BudgetTightness::kMid;
  } else if (tightness == "high") {
    mode = BudgetTightness::kHigh;
  } else {
    throw std::invalid_argument("tightness must be low, mid, or high");
  }
  return instance_to_json(generate_instance(n, k, seed, mode)).dump();
}

}  // namespace

PYBIND11_MODULE(_rentfair, m) {
  m.doc() = "Exact envy-free rent division under soft-budget preferences";

  py::register_exception<SizeGuardError>(m, "SizeGuardError",
                                         PyExc_RuntimeError);

  m.def("solve_instance", &solve_instance, py::arg("instance_json"),
        py::arg("objective") = std::nullopt, py::arg("trace") = false,
        "Solve an instance document; returns the result document. The "
        "optional objective overrides the family with full scope.");
  m.def("oracle_instance", &oracle_instance, py::arg("instance_json"),
        py::arg("guard") = kDefaultOracleGuard,
        "Brute-force optimum of a small instance document.");
  m.def("verify_instance", &verify_instance, py::arg("instance_json"),
        py::arg("result_json"),
        "Check a result document: envy-free, balanced, in its selection.");
  m.def("baseline_instance", &baseline_instance, py::arg("instance_json"),
        "Undirected envy-free allocation (no selection guarantee).");
  m.def("generate_instance", &generate_instance_json, py::arg("n"),
        py::arg("k"), py::arg("seed"), py::arg("tightness") = "mid",
        "Deterministic seeded instance document.");
  m.def("iteration_bound", &iteration_bound, py::arg("n"), py::arg("k"),
        "Loop-iteration budget for n agents and k slopes.");
}
