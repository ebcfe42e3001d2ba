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
//
// End-to-end acceptance runs: every check is exact (zero tolerance) and
// prints one PASS/FAIL line. The process exits nonzero if any criterion
// fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "rentfair/bench.hpp"
#include "rentfair/cli.hpp"
#include "rentfair/gen.hpp"
#include "rentfair/io.hpp"
#include "rentfair/oracle.hpp"
#include "rentfair/solver.hpp"
#include "test_util.hpp"

namespace rentfair {
namespace {

using test::Q;

constexpr ObjectiveFamily kFamilies[] = {
    ObjectiveFamily::kMaxminUtility, ObjectiveFamily::kMinmaxUtility,
    ObjectiveFamily::kMaxminRent, ObjectiveFamily::kMinmaxRent};

struct Tally {
  int checked = 0;
  std::ostringstream why;
  bool ok = true;

  void expect(bool condition, const std::string& message) {
    ++checked;
    if (!condition && ok) {
      ok = false;
      why << message;
    }
  }
};

// Every iterate recorded in a trace must be envy-free at its own total and
// the final rents must balance the economy's budget exactly.
void check_trace_iterates(const Economy& e, const SolveResult& result,
                          Tally& tally) {
  auto envy_free_at_own_total = [&](const std::vector<Rational>& rents,
                                    const std::vector<std::size_t>& sigma) {
    Rational total;
    for (const Rational& r : rents) total += r;
    return !is_envy_free_at(e, Allocation{rents, sigma}, total).has_value();
  };
  tally.expect(envy_free_at_own_total(result.trace.init_allocation.rents,
                                      result.trace.init_allocation.assignment),
               "initial allocation not envy-free");
  for (const IterationRecord& rec : result.trace.iterations) {
    tally.expect(envy_free_at_own_total(rec.step_rents, rec.sigma),
                 "step iterate not envy-free");
    if (rec.restore_rents)
      tally.expect(envy_free_at_own_total(*rec.restore_rents, rec.sigma),
                   "recovered iterate not envy-free");
  }
  tally.expect(result.allocation.rent_sum() == e.total_rent,
               "final rents do not sum to the total exactly");
}

bool criterion_1_exact_trace() {
  auto start = std::chrono::steady_clock::now();
  Economy e = test::e2();
  Objective obj = Objective::full_scope(ObjectiveFamily::kMaxminUtility, e);
  SolveResult result = solve(e, obj);
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  bool ok = result.allocation.rents == test::rents({Q(19, 3), Q(11, 3)}) &&
            result.allocation.assignment == std::vector<std::size_t>{0, 1} &&
            result.objective_value == Q(7, 3) &&
            result.trace.iterations.size() == 2 &&
            result.trace.iterations[0].step_rents ==
                test::rents({Q(7), Q(5)}) &&
            sb_set(e, result.trace.init_allocation.rents).size() == 4 &&
            result.trace.iterations[0].sb_size_after == 2 &&
            result.certified && seconds < 1.0;
  std::cout << (ok ? "PASS" : "FAIL")
            << " criterion 1: exact two-iteration soft-budget trace, rents "
               "(19/3, 11/3), value 7/3, |SB| 4 -> 2, "
            << seconds << "s\n";
  return ok;
}

bool criterion_2_oracle_equivalence(std::vector<std::pair<Economy,
                                                          SolveResult>>*
                                        maxmin_runs) {
  SplitMix64 rng(20260808);
  Tally tally;
  int instances = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    int count = n == 2 ? 260 : n == 3 ? 160 : 80;
    for (int trial = 0; trial < count; ++trial) {
      std::size_t k = 1 + static_cast<std::size_t>(trial % 3);
      Economy e = test::random_economy(rng, n, k);
      ++instances;
      for (ObjectiveFamily family : kFamilies) {
        Objective obj = Objective::full_scope(family, e);
        SolveResult result = solve(e, obj);
        OracleResult truth = oracle_solve(e, obj);
        tally.expect(result.objective_value == truth.value,
                     "solver value differs from the oracle optimum");
        tally.expect(oracle_is_optimal(e, obj, result.allocation),
                     "solver output rejected by the oracle");
        check_trace_iterates(e, result, tally);
        if (family == ObjectiveFamily::kMaxminUtility && maxmin_runs &&
            trial % 3 == 0)
          maxmin_runs->emplace_back(e, result);
      }
    }
  }
  std::cout << (tally.ok ? "PASS" : "FAIL")
            << " criterion 2: oracle equivalence, exact, on " << instances
            << " instances x 4 families";
  if (!tally.ok) std::cout << " (" << tally.why.str() << ")";
  std::cout << "\n";
  return tally.ok;
}

bool criterion_3_quasilinear(std::vector<std::pair<Economy, SolveResult>>*
                                 quasi_runs) {
  SplitMix64 rng(424242);
  Tally tally;
  int instances = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    Economy e = test::random_economy(rng, n, /*k=*/1);
    ++instances;
    Objective obj = Objective::full_scope(ObjectiveFamily::kMaxminUtility, e);
    SolveResult result = solve(e, obj);
    test::QuasiLinearOpt reference = test::quasilinear_maxmin(e);
    tally.expect(result.objective_value == reference.value,
                 "value differs from the quasi-linear reference");
    tally.expect(result.allocation.rents == reference.rents,
                 "rents differ from the quasi-linear reference");
    check_trace_iterates(e, result, tally);
    if (quasi_runs && trial % 4 == 0) quasi_runs->emplace_back(e, result);
  }
  std::cout << (tally.ok ? "PASS" : "FAIL")
            << " criterion 3: quasi-linear degeneration, exact, on "
            << instances << " slope-set-{0} instances";
  if (!tally.ok) std::cout << " (" << tally.why.str() << ")";
  std::cout << "\n";
  return tally.ok;
}

bool criterion_4_envy_free_iterates(
    const std::vector<std::pair<Economy, SolveResult>>& sampled_runs) {
  Tally tally;
  for (const auto& [economy, result] : sampled_runs)
    check_trace_iterates(economy, result, tally);
  bool ok = tally.ok && !sampled_runs.empty();
  std::cout << (ok ? "PASS" : "FAIL")
            << " criterion 4: every iterate envy-free and final budget "
               "balance exact, "
            << tally.checked << " checks over " << sampled_runs.size()
            << " traces";
  if (!tally.ok) std::cout << " (" << tally.why.str() << ")";
  std::cout << "\n";
  return ok;
}

bool criterion_5_rent_monotonicity() {
  SplitMix64 rng(515151);
  Tally tally;
  int triples = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
    Economy lo = test::random_economy(rng, n, 1 + trial % 3);
    Economy hi = lo;
    hi.total_rent =
        lo.total_rent + Q(rng.uniform(1, 40), rng.uniform(1, 4));
    Objective obj = Objective::full_scope(kFamilies[trial % 4], lo);
    SolveResult at_lo = solve(lo, obj);
    SolveResult at_hi = solve(hi, obj);
    ++triples;
    for (std::size_t a = 0; a < n; ++a)
      tally.expect(at_lo.allocation.rents[a] < at_hi.allocation.rents[a],
                   "a rent failed to rise strictly with the total");
    const std::vector<std::size_t>& scope =
        obj.scopes_agents() ? obj.scope : std::vector<std::size_t>{};
    for (std::size_t i : scope)
      tally.expect(own_utility(lo, at_lo.allocation, i) >
                       own_utility(hi, at_hi.allocation, i),
                   "a scoped utility failed to fall strictly");
    for (std::size_t i = 0; i < n; ++i)
      tally.expect(own_utility(lo, at_lo.allocation, i) >
                       own_utility(hi, at_hi.allocation, i),
                   "a utility failed to fall strictly");
  }
  std::cout << (tally.ok ? "PASS" : "FAIL")
            << " criterion 5: strict rent/utility monotonicity on "
            << triples << " (economy, m1 < m2) pairs, all four families";
  if (!tally.ok) std::cout << " (" << tally.why.str() << ")";
  std::cout << "\n";
  return tally.ok;
}

bool criterion_6_iteration_bound() {
  Tally tally;
  std::size_t rows_total = 0;
  try {
    std::vector<std::vector<BenchRow>> batches;
    batches.push_back(run_bench(2, 6, 2, 4, 11));
    batches.push_back(run_bench(2, 6, 1, 3, 12));
    batches.push_back(run_bench(2, 5, 3, 3, 13));
    batches.push_back(run_bench(7, 9, 2, 2, 14));
    batches.push_back(run_bench(10, 10, 2, 2, 15));
    batches.push_back(run_bench(10, 10, 3, 1, 16));
    for (const auto& rows : batches) {
      for (const BenchRow& row : rows) {
        ++rows_total;
        tally.expect(row.iterations <= row.bound,
                     "iterations exceeded the bound");
        tally.expect(row.bound == iteration_bound(row.n, row.k),
                     "row carries the wrong bound");
      }
    }
  } catch (const std::exception& ex) {
    tally.expect(false, std::string("bench threw: ") + ex.what());
  }
  std::cout << (tally.ok ? "PASS" : "FAIL")
            << " criterion 6: loop iterations <= n^2 (n+1)^(k-1) + 2 on "
            << rows_total << " bench rows up to n=10, k=3";
  if (!tally.ok) std::cout << " (" << tally.why.str() << ")";
  std::cout << "\n";
  return tally.ok;
}

bool criterion_7_baseline(std::vector<std::pair<Economy, Allocation>>*
                              baseline_runs) {
  SplitMix64 rng(717171);
  Tally tally;
  int instances = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    Economy e = test::random_economy(rng, n, 1 + trial % 3);
    Allocation base = rebate_baseline(e);
    ++instances;
    tally.expect(base.rent_sum() == e.total_rent,
                 "baseline misses the total");
    tally.expect(!is_envy_free(e, base).has_value(),
                 "baseline output is not envy-free");

    Objective obj = Objective::full_scope(ObjectiveFamily::kMaxminUtility, e);
    SolveResult directed = solve(e, obj);
    tally.expect(directed.objective_value >= objective_value(e, base, obj),
                 "directed search fell below the baseline's minimum");
    if (baseline_runs && n <= 3) baseline_runs->emplace_back(e, base);
  }
  std::cout << (tally.ok ? "PASS" : "FAIL")
            << " criterion 7: baseline envy-free at the exact total and "
               "dominated by the directed search, "
            << instances << " instances";
  if (!tally.ok) std::cout << " (" << tally.why.str() << ")";
  std::cout << "\n";
  return tally.ok;
}

bool criterion_8_membership_soundness(
    std::vector<std::pair<Economy, Allocation>>* baseline_runs) {
  SplitMix64 rng(818181);
  Tally tally;
  // Top up the pool from criterion 7 to 500 baseline allocations.
  std::vector<std::pair<Economy, Allocation>>& pool = *baseline_runs;
  while (pool.size() < 500) {
    std::size_t n = 2 + pool.size() % 2;
    Economy e = test::random_economy(rng, n, 1 + pool.size() % 3);
    pool.emplace_back(e, rebate_baseline(e));
  }
  for (const auto& [economy, alloc] : pool) {
    for (ObjectiveFamily family : kFamilies) {
      Objective obj = Objective::full_scope(family, economy);
      bool member = check_membership(economy, alloc, obj).member;
      bool optimal = oracle_is_optimal(economy, obj, alloc);
      tally.expect(member == optimal,
                   "membership and oracle optimality disagree");
    }
  }
  std::cout << (tally.ok ? "PASS" : "FAIL")
            << " criterion 8: membership test agrees with the oracle on "
            << pool.size() << " baseline allocations x 4 families";
  if (!tally.ok) std::cout << " (" << tally.why.str() << ")";
  std::cout << "\n";
  return tally.ok;
}

bool criterion_9_nonnegative_rents() {
  // Identical preferences strongly favoring one room: at total 0 someone
  // must be compensated; at total 20 nobody needs to be.
  const char* tight = R"({
    "agents": ["1", "2"], "rooms": ["a", "b"],
    "slope_set": [0], "values": [[0, 10], [0, 10]],
    "budgets": [50, 50], "rho_index": [0, 0], "total_rent": 0
  })";
  auto run = [](const std::string& text) -> std::string {
    ParsedInstance parsed = parse_instance_text(text);
    if (!parsed.instance) return "parse-error";
    Objective obj = Objective::full_scope(ObjectiveFamily::kMaxminRent,
                                          parsed.instance->economy);
    SolveResult result = solve(parsed.instance->economy, obj);
    return result.objective_value.is_negative() ? "impossible" : "possible";
  };
  std::string low = run(tight);
  std::string high = run(std::string(tight).replace(
      std::string(tight).find("\"total_rent\": 0"), 15,
      "\"total_rent\": 20"));

  // The same question through the command-line flow.
  std::ostringstream out_lo, err_lo, out_hi, err_hi;
  bool cli_ok = true;
  {
    std::ofstream f("acc_nonneg_low.json");
    f << tight;
  }
  {
    std::string hi_text(tight);
    hi_text.replace(hi_text.find("\"total_rent\": 0"), 15,
                    "\"total_rent\": 20");
    std::ofstream f("acc_nonneg_high.json");
    f << hi_text;
  }
  cli::SolveOptions lo_opts;
  lo_opts.instance_path = "acc_nonneg_low.json";
  lo_opts.require_nonnegative = true;
  cli_ok = cli_ok && cli::cmd_solve(lo_opts, out_lo, err_lo) == cli::kOk;
  cli::SolveOptions hi_opts;
  hi_opts.instance_path = "acc_nonneg_high.json";
  hi_opts.require_nonnegative = true;
  cli_ok = cli_ok && cli::cmd_solve(hi_opts, out_hi, err_hi) == cli::kOk;
  std::remove("acc_nonneg_low.json");
  std::remove("acc_nonneg_high.json");

  bool ok = low == "impossible" && high == "possible" && cli_ok &&
            out_lo.str().find("\"impossible\"") != std::string::npos &&
            out_hi.str().find("\"possible\"") != std::string::npos;
  std::cout << (ok ? "PASS" : "FAIL")
            << " criterion 9: nonnegative-rent feasibility reported as "
            << low << " / " << high << "\n";
  return ok;
}

}  // namespace
}  // namespace rentfair

int main() {
  using namespace rentfair;
  std::vector<std::pair<Economy, SolveResult>> sampled_runs;
  std::vector<std::pair<Economy, Allocation>> baseline_runs;

  bool ok = true;
  ok &= criterion_1_exact_trace();
  ok &= criterion_2_oracle_equivalence(&sampled_runs);
  ok &= criterion_3_quasilinear(&sampled_runs);
  ok &= criterion_4_envy_free_iterates(sampled_runs);
  ok &= criterion_5_rent_monotonicity();
  ok &= criterion_6_iteration_bound();
  ok &= criterion_7_baseline(&baseline_runs);
  ok &= criterion_8_membership_soundness(&baseline_runs);
  ok &= criterion_9_nonnegative_rents();

  std::cout << (ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED")
            << std::endl;
  return ok ? 0 : 1;
}
