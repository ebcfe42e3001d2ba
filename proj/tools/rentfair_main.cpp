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

#include <CLI11.hpp>

#include <iostream>

#include "rentfair/cli.hpp"
#include "rentfair/model.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "rentfair: exact envy-free rent division under soft-budget "
      "preferences"};
  app.require_subcommand(1);

  rentfair::cli::SolveOptions solve_opts;
  CLI::App* solve = app.add_subcommand(
      "solve", "Solve an instance for its selection family");
  solve->add_option("instance", solve_opts.instance_path, "instance JSON")
      ->required();
  solve->add_option("--objective", solve_opts.objective_override,
                    "override the family: maxmin-utility, minmax-utility, "
                    "maxmin-rent, minmax-rent");
  solve->add_flag("--trace", solve_opts.trace,
                  "include the per-iteration trace in the result");
  solve->add_option("--output", solve_opts.output_path,
                    "write the result here instead of stdout");
  solve->add_flag("--require-nonnegative", solve_opts.require_nonnegative,
                  "solve maxmin-rent and report whether an envy-free "
                  "allocation without compensation exists");

  std::string verify_instance, verify_result;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check a result: envy-free, balanced, in its selection");
  verify->add_option("instance", verify_instance, "instance JSON")
      ->required();
  verify->add_option("result", verify_result, "result JSON")->required();

  rentfair::cli::OracleOptions oracle_opts;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Brute-force optimum for small instances");
  oracle->add_option("instance", oracle_opts.instance_path, "instance JSON")
      ->required();
  oracle->add_flag("--force", oracle_opts.force, "ignore the size guard");
  oracle->add_option("--output", oracle_opts.output_path,
                     "write the result here instead of stdout");

  rentfair::cli::GenOptions gen_opts;
  CLI::App* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("--n", gen_opts.n, "agents (= rooms)");
  gen->add_option("--k", gen_opts.k, "slope set size");
  gen->add_option("--seed", gen_opts.seed, "seed");
  gen->add_option("--budget-tightness", gen_opts.budget_tightness,
                  "low, mid, or high");
  gen->add_option("--output", gen_opts.output_path,
                  "write the instance here instead of stdout");

  rentfair::cli::BenchOptions bench_opts;
  CLI::App* bench = app.add_subcommand(
      "bench", "Loop-iteration study over generated instances (CSV)");
  bench->add_option("--n-range", bench_opts.n_range, "for example 2..6");
  bench->add_option("--k", bench_opts.k, "slope set size");
  bench->add_option("--trials", bench_opts.trials, "trials per size");
  bench->add_option("--seed", bench_opts.seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rentfair::cli::kValidation;
  }

  try {
    if (solve->parsed())
      return rentfair::cli::cmd_solve(solve_opts, std::cout, std::cerr);
    if (verify->parsed())
      return rentfair::cli::cmd_verify(verify_instance, verify_result,
                                       std::cout, std::cerr);
    if (oracle->parsed())
      return rentfair::cli::cmd_oracle(oracle_opts, std::cout, std::cerr);
    if (gen->parsed())
      return rentfair::cli::cmd_gen(gen_opts, std::cout, std::cerr);
    if (bench->parsed())
      return rentfair::cli::cmd_bench(bench_opts, std::cout, std::cerr);
  } catch (const rentfair::InternalError& ex) {
    std::cerr << "internal error: " << ex.what() << '\n';
    return rentfair::cli::kInternal;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return rentfair::cli::kInternal;
  }
  return rentfair::cli::kValidation;
}
