// Copyright 2026 The nwsssp Authors
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

#include <iostream>

#include "CLI11.hpp"
#include "nwsssp_tools/commands.hpp"

namespace {

using nwsssp::tools::SolverFlags;

void add_solver_flags(CLI::App* app, SolverFlags& f) {
  app->add_option("--seed", f.seed, "Solver random seed")->capture_default_str();
  app->add_option("--k-factor", f.k_factor, "Sampling divisor K: positive integer or inf")
      ->capture_default_str();
  app->add_flag("--no-diam-bound", f.no_diam_bound,
                "Start each SCC with kappa = n instead of the diameter bound");
  app->add_option("--base-case", f.base_case, "Base case when n + kappa <= this")
      ->capture_default_str();
  app->add_option("--inner", f.inner, "Inner solver")
      ->check(CLI::IsMember({"lazy", "gor"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Negative-weight single-source shortest paths: solver, baselines, "
               "instance generators and benchmark harness"};
  app.require_subcommand(1);

  nwsssp::tools::GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write an instance as a DIMACS file");
  generate->add_option("spec", gen.spec, "Descriptor family:param[:extra]:seed")->required();
  generate->add_option("out", gen.out_path, "Output .gr file")->required();
  generate->add_option("--base-graph", gen.base_graph, "DIMACS base graph for usa_shift");

  nwsssp::tools::SolveArgs sol;
  auto* solve = app.add_subcommand("solve", "Distances from one source, or a cycle verdict");
  solve->add_option("graph", sol.graph, "DIMACS .gr file")->required();
  solve->add_option("--source", sol.source, "Source vertex (0-based)")->capture_default_str();
  solve->add_option("--algorithm", sol.algorithm, "our, gor or bf")
      ->check(CLI::IsMember({"our", "gor", "bf"}))
      ->capture_default_str();
  solve->add_option("--timeout", sol.timeout_s, "Seconds; 0 disables")->capture_default_str();
  solve->add_flag("--super-source", sol.super_source,
                  "Solve from an added zero-weight super source");
  solve->add_option("-o,--out", sol.out_path, "Distance file (default stdout)");
  solve->add_option("--potential-out", sol.potential_out, "Write the final potential (our)");
  add_solver_flags(solve, sol.flags);

  nwsssp::tools::BenchArgs ben;
  auto* bench = app.add_subcommand("bench", "Timed repetitions over instances, CSV output");
  bench->add_option("specs", ben.specs, "Instance descriptors");
  bench->add_option("--spec-file", ben.spec_file, "File with one descriptor per line");
  bench->add_option("--algorithm", ben.algorithms, "Repeatable: our, gor, bf")
      ->check(CLI::IsMember({"our", "gor", "bf"}))
      ->capture_default_str();
  bench->add_option("--reps", ben.reps, "Repetitions per instance and algorithm")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--timeout", ben.timeout_s, "Per-run limit in seconds; 0 disables")
      ->capture_default_str();
  bench->add_option("--jobs", ben.jobs, "Instances benchmarked in parallel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--csv", ben.csv, "CSV output (default stdout)");
  bench->add_flag("--super-source", ben.super_source,
                  "Run from an added zero-weight super source");
  bench->add_option("--source", ben.source, "Source vertex (0-based)")->capture_default_str();
  bench->add_option("--dat-dir", ben.dat_dir, "Write gnuplot .dat files per series here");
  bench->add_option("--base-graph", ben.base_graph, "DIMACS base graph for usa_shift");
  bench->add_flag("--no-validate", ben.no_validate, "Skip the distance certificate check");
  bench->add_flag("-q,--quiet", ben.quiet, "No progress lines on stderr");
  add_solver_flags(bench, ben.flags);

  nwsssp::tools::FitArgs fitargs;
  auto* fit = app.add_subcommand("fit", "Fit t = a * m^b to bench CSV data rows");
  fit->add_option("csv", fitargs.csv, "CSV written by bench")->required();
  fit->add_option("--algorithm", fitargs.algorithm, "Only rows of this algorithm");
  fit->add_option("--family", fitargs.family, "Only instances of this family");

  nwsssp::tools::ValidateArgs val;
  auto* validate = app.add_subcommand("validate", "Check distances, potentials, restrictedness");
  validate->add_option("graph", val.graph, "DIMACS .gr file")->required();
  validate->add_option("--source", val.source, "Source of the distance file")
      ->capture_default_str();
  validate->add_option("--distances", val.distances, "Distance file to check");
  validate->add_option("--potential", val.potential, "Potential file to check");
  validate->add_flag("--no-oracle", val.no_oracle, "Skip the Bellman-Ford comparison");
  validate->add_flag("--restricted", val.restricted, "Check weights >= -1 and cycle mean >= 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : nwsssp::tools::kExitError;
  }

  if (generate->parsed()) return nwsssp::tools::cmd_generate(gen, std::cout, std::cerr);
  if (solve->parsed()) return nwsssp::tools::cmd_solve(sol, std::cout, std::cerr);
  if (bench->parsed()) return nwsssp::tools::cmd_bench(ben, std::cout, std::cerr);
  if (fit->parsed()) return nwsssp::tools::cmd_fit(fitargs, std::cout, std::cerr);
  return nwsssp::tools::cmd_validate(val, std::cout, std::cerr);
}
