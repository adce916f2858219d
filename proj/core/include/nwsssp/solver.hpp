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

// Near-linear negative-weight SSSP for restricted graphs, engineered for
// practice:
//
//   solve()            SCC preprocessing, per-SCC recursion, DAG fix-up
//                      across the condensation, then Dijkstra on reduced
//                      weights from the source.
//   restricted_sssp()  decompose into low-diameter pieces, recurse on each
//                      piece, repair DAG edges by potential shifts and the
//                      cut edges with one inner-solver pass.
//
// Every entry point returns std::nullopt (or SsspResult::negative_cycle) when
// it finds a negative cycle. Inputs need not be restricted; restrictedness
// only affects speed.

#ifndef NWSSSP_SOLVER_HPP_
#define NWSSSP_SOLVER_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "nwsssp/deadline.hpp"
#include "nwsssp/graph.hpp"
#include "nwsssp/result.hpp"
#include "nwsssp/rng.hpp"
#include "nwsssp/scc.hpp"

namespace nwsssp {

// Divisor K applied to the number of lightness samples; infinite means a
// single sample per direction.
class KFactor {
 public:
  constexpr explicit KFactor(std::uint64_t value) : value_(value) {}
  static constexpr KFactor infinite() { return KFactor(0); }

  constexpr bool is_infinite() const { return value_ == 0; }
  // Meaningless when infinite.
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr bool operator==(KFactor, KFactor) = default;

 private:
  std::uint64_t value_;
};

enum class InnerSolver { lazy_dijkstra, goldberg_radzik };
enum class Direction { in, out };

constexpr Direction opposite(Direction d) {
  return d == Direction::in ? Direction::out : Direction::in;
}

// Constant factors of the decomposition.
struct DecomposeConstants {
  double sample_scale = 50.0;     // samples = ceil(sample_scale * ln|G|)
  double geometric_scale = 20.0;  // radius ~ Geom(geometric_scale * ln|G| / kappa)
  std::uint32_t marking_radius_divisor = 4;  // marking balls have radius kappa / 4
  std::uint32_t light_numerator = 3;         // light: marked < 3/5 of the samples
  std::uint32_t light_denominator = 5;
  std::uint32_t progress_numerator = 3;      // kappa halves for pieces >= 3/4 |G|
  std::uint32_t progress_denominator = 4;
};

struct SolverConfig {
  KFactor k_factor{40};
  // Base case when n + kappa <= threshold.
  std::uint64_t base_case_threshold = 300;
  bool use_diameter_bound = true;
  InnerSolver inner_solver = InnerSolver::lazy_dijkstra;
  std::uint64_t rng_seed = 1;
  DecomposeConstants constants{};
  std::optional<Clock::time_point> deadline;

  // Throws std::invalid_argument when k_factor or the threshold is out of
  // range.
  void validate() const;
};

// Upper bound on the number of negative edges on any simple non-positive
// path of the current subproblem.
struct Kappa {
  std::int64_t value = 1;
};

struct Decomposition {
  ComponentList components;  // topological order in G \ separator
  EdgeSet separator;
};

struct SolverStats {
  std::uint64_t recursive_calls = 0;
  std::uint64_t base_cases = 0;
  std::uint64_t decompositions = 0;
  std::uint64_t separator_edges = 0;
  std::uint64_t inner_solver_calls = 0;
  std::uint64_t lazy_phases = 0;
  std::uint32_t max_depth = 0;
};

// Snapshot handed to hooks. `potential` is indexed by vertex of the graph
// passed to the entry point.
struct RecursionEvent {
  std::uint32_t depth;
  std::span<const Vertex> vertices;
  std::span<const Weight> potential;
};

struct RecursionHooks {
  // Runs after the DAG fix-up and before the closing inner-solver pass.
  std::function<void(const RecursionEvent&)> before_final_pass;
};

// Dijkstra interleaved with Bellman-Ford rounds over negative reduced edges,
// from an implicit super source with d(v) = -phi(v). Returns phi + d, a valid
// potential. Reports a negative cycle when some vertex improves in more than
// n rounds.
std::optional<Potential> lazy_dijkstra(const Graph& g, const Potential& phi,
                                       SolverStats* stats = nullptr);

// Shifts phi(v) by i * M for v in the i-th component (1-based), where M is
// one less than the smallest nonpositive reduced weight over g's edges.
// Edges between distinct components that run forward in the given order
// become nonnegative. Debug builds check that edges inside one component are
// already nonnegative.
Potential fix_dag_edges(const Graph& g, const ComponentList& components,
                        const Potential& phi);

std::uint64_t light_sample_rounds(std::size_t n, const SolverConfig& cfg);
double geometric_rate(std::size_t n, Kappa kappa, const SolverConfig& cfg);

// Vertices whose sampled kappa/4-ball (in direction `dir`) looks small.
VertexSet estimate_light_vertices(const Graph& g, Kappa kappa, Direction dir,
                                  const SolverConfig& cfg, Rng& rng);

Decomposition decompose(const Graph& g, Kappa kappa, const SolverConfig& cfg,
                        Rng& rng);

// g should be strongly connected; any negative-cycle-free input gives a
// valid potential.
std::optional<Potential> restricted_sssp(const Graph& g, const Potential& phi,
                                         Kappa kappa, const SolverConfig& cfg,
                                         Rng& rng,
                                         const RecursionHooks* hooks = nullptr,
                                         SolverStats* stats = nullptr);

// ecc_out(p) + ecc_in(p) in G>=0 for the probe p = 0: at most twice the
// diameter and at least the diameter. kInfinity if g is not strongly
// connected; 0 for graphs with fewer than two vertices.
Weight diameter_upper_bound(const Graph& g);

struct SolveOutput {
  SsspResult result;
  SolverStats stats;
};

// Exact distances from `source` or a negative-cycle verdict (for any
// negative cycle in g, reachable or not). Throws std::out_of_range for a bad
// source, TimeoutError past cfg.deadline, and std::logic_error if the final
// potential fails its validity scan.
SolveOutput solve_with_stats(const Graph& g, Vertex source, const SolverConfig& cfg);
SsspResult solve(const Graph& g, Vertex source, const SolverConfig& cfg);

}  // namespace nwsssp

#endif  // NWSSSP_SOLVER_HPP_
