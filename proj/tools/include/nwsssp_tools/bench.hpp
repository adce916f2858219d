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

#ifndef NWSSSP_TOOLS_BENCH_HPP_
#define NWSSSP_TOOLS_BENCH_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nwsssp/graph.hpp"
#include "nwsssp/instance.hpp"
#include "nwsssp/result.hpp"
#include "nwsssp/solver.hpp"

namespace nwsssp::tools {

enum class Algorithm { our, gor, bf };

Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm a);

// "inf" / "infinite" or a positive integer.
KFactor parse_k_factor(std::string_view text);

enum class Outcome { distances, negative_cycle, timeout, error };
std::string_view outcome_name(Outcome o);

struct RunResult {
  Outcome outcome = Outcome::error;
  SsspResult result;
  double wall_time_s = 0;
  std::string error;
};

// Times only the algorithm call. Timeouts and exceptions become outcomes.
RunResult run_algorithm(const Graph& g, Vertex source, Algorithm algorithm,
                        const SolverConfig& cfg, double timeout_s);

// Vertex 0 becomes a new source with zero-weight edges to every old vertex
// (old vertex v is v + 1).
Graph with_super_source(const Graph& g);

struct BenchRow {
  std::string instance;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::string rep;  // index, or "mean" / "sem"
  double wall_time_s = 0;
  std::string outcome;
  std::string valid;  // "true" / "false", empty unless distances
};

struct BenchOptions {
  std::vector<InstanceSpec> instances;
  std::vector<Algorithm> algorithms{Algorithm::our, Algorithm::gor};
  std::uint32_t reps = 5;
  double timeout_s = 1800;
  std::uint32_t jobs = 1;
  bool super_source = false;
  Vertex source = 0;
  bool validate = true;
  SolverConfig cfg;
  std::optional<std::string> base_graph;  // DIMACS file for usa_shift
};

// Data rows for every (instance, algorithm, rep) followed, per group, by the
// mean and sem rows. Rows come out in group order whatever `jobs` is.
// Progress lines go to `log` when given.
std::vector<BenchRow> run_bench(const BenchOptions& opt, std::ostream* log = nullptr);

struct TimeSummary {
  double mean = 0;
  double sem = 0;  // standard error of the mean, 0 for one sample
};
TimeSummary summarize_times(std::span<const double> times);

inline constexpr std::string_view kCsvHeader =
    "instance,n,m,algorithm,seed,rep,wall_time_s,outcome,valid";

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);
// Throws std::runtime_error on a bad header or row.
std::vector<BenchRow> read_csv(std::istream& in);

// One `<family>_<algorithm>.dat` per series with `m mean sem` lines sorted
// by m; returns the paths written.
std::vector<std::string> write_dat_files(const std::string& dir,
                                         const std::vector<BenchRow>& rows);

}  // namespace nwsssp::tools

#endif  // NWSSSP_TOOLS_BENCH_HPP_
