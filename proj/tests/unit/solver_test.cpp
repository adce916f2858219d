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

#include "nwsssp/solver.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nwsssp/dijkstra.hpp"
#include "nwsssp/generators.hpp"
#include "nwsssp/scc.hpp"
#include "oracles.hpp"

namespace nwsssp {
namespace {

Graph two_cycle(Weight a, Weight b) { return Graph(2, {{0, 1, a}, {1, 0, b}}); }

// Forces the recursion to run on small inputs.
SolverConfig deep_config(std::uint64_t seed = 1) {
  SolverConfig cfg;
  cfg.base_case_threshold = 3;
  cfg.rng_seed = seed;
  return cfg;
}

TEST(ConfigTest, Validate) {
  SolverConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.base_case_threshold = 2;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.base_case_threshold = 300;
  cfg.constants.light_denominator = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(ConfigTest, SampleRounds) {
  SolverConfig cfg;
  cfg.k_factor = KFactor(1);
  EXPECT_EQ(light_sample_rounds(1000, cfg),
            static_cast<std::uint64_t>(std::ceil(50 * std::log(1000.0))));
  cfg.k_factor = KFactor(40);
  EXPECT_EQ(light_sample_rounds(1000, cfg),
            static_cast<std::uint64_t>(std::ceil(50 * std::log(1000.0))) / 40);
  cfg.k_factor = KFactor(100000);
  EXPECT_EQ(light_sample_rounds(1000, cfg), 1u);
  cfg.k_factor = KFactor::infinite();
  EXPECT_EQ(light_sample_rounds(1000000, cfg), 1u);
}

TEST(ConfigTest, GeometricRate) {
  SolverConfig cfg;
  EXPECT_DOUBLE_EQ(geometric_rate(1000, Kappa{1000000}, cfg), 20 * std::log(1000.0) / 1e6);
  EXPECT_DOUBLE_EQ(geometric_rate(1000, Kappa{3}, cfg), 1.0);
}

TEST(LazyDijkstraTest, NonnegativeMatchesMultiSourceDijkstra) {
  const Graph g = oracle::random_mixed_graph(60, 300, 4, 20, 0);
  std::vector<SourceSeed> seeds;
  for (Vertex v = 0; v < 60; ++v) seeds.push_back({v, 0});
  const auto phi = lazy_dijkstra(g, Potential(60));
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(is_valid_potential(g, *phi));
  EXPECT_EQ(std::vector<Weight>(phi->values().begin(), phi->values().end()), dijkstra(g, seeds));
}

TEST(LazyDijkstraTest, CycleVerdict) {
  EXPECT_FALSE(lazy_dijkstra(two_cycle(-1, 0), Potential(2)).has_value());
  EXPECT_FALSE(lazy_dijkstra(Graph(1, {{0, 0, -1}}), Potential(1)).has_value());
}

TEST(LazyDijkstraTest, BadRd1) {
  const Graph g = gen_bad_rd1(5);
  SolverStats stats;
  const auto phi = lazy_dijkstra(g, Potential(g.num_vertices()), &stats);
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(is_valid_potential(g, *phi));
  EXPECT_GT(stats.lazy_phases, 1u);
  const SsspResult r = solve(g, 0, SolverConfig{});
  EXPECT_EQ(r.distances, *oracle::bellman_ford(g, 0));
}

TEST(LazyDijkstraTest, RespectsInputPotential) {
  const Graph g = oracle::random_mixed_graph(30, 120, 8);
  std::vector<Weight> p(30);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<Weight>(i % 7) * 3 - 10;
  const auto phi = lazy_dijkstra(g, Potential(p));
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(is_valid_potential(g, *phi));
}

TEST(LazyDijkstraTest, SizeMismatch) {
  EXPECT_THROW(lazy_dijkstra(two_cycle(1, 1), Potential(3)), std::invalid_argument);
}

TEST(FixDagTest, TwoSingletons) {
  const Graph g(2, {{0, 1, -1}});
  const ComponentList comps(2, {0, 1}, {0, 1, 2});
  const Potential phi = fix_dag_edges(g, comps, Potential(2));
  EXPECT_EQ(phi[0], -2);
  EXPECT_EQ(phi[1], -4);
  EXPECT_EQ(reduced_weight(g.edge(0), phi), 1);
}

TEST(FixDagTest, SingleComponentIsUniformShift) {
  const Graph g = two_cycle(3, 4);
  const ComponentList comps(2, {0, 1}, {0, 2});
  const Potential phi = fix_dag_edges(g, comps, Potential(std::vector<Weight>{5, 1}));
  for (const Edge& e : g.edges()) {
    EXPECT_EQ(reduced_weight(e, phi), reduced_weight(e, Potential(std::vector<Weight>{5, 1})));
  }
}

TEST(FixDagTest, NonnegativeDagOfSingletons) {
  for (BadFamily f : {BadFamily::bfct, BadFamily::gor, BadFamily::rd1, BadFamily::rd2,
                      BadFamily::dfs}) {
    const Graph g = gen_bad(f, 20);
    const Potential phi = fix_dag_edges(g, kosaraju_scc(g), Potential(g.num_vertices()));
    EXPECT_TRUE(is_valid_potential(g, phi)) << family_name(f);
  }
}

TEST(LightVerticesTest, SingleVertexNeverLight) {
  Rng rng(1);
  const VertexSet l = estimate_light_vertices(Graph(1, {}), Kappa{1}, Direction::out,
                                              SolverConfig{}, rng);
  EXPECT_TRUE(l.empty());
}

TEST(LightVerticesTest, ZeroCompleteGraphHasNoLightVertex) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 12; ++u) {
    for (Vertex v = 0; v < 12; ++v) {
      if (u != v) edges.push_back({u, v, 0});
    }
  }
  const Graph g(12, std::move(edges));
  SolverConfig cfg;
  cfg.k_factor = KFactor(1);
  for (Direction d : {Direction::in, Direction::out}) {
    Rng rng(2);
    EXPECT_TRUE(estimate_light_vertices(g, Kappa{4}, d, cfg, rng).empty());
  }
}

TEST(LightVerticesTest, LongCycleIsAllLight) {
  // Radius-1 balls on a 200-cycle of weight-1 edges hold two vertices each.
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 200; ++v) edges.push_back({v, (v + 1) % 200, 1});
  const Graph g(200, std::move(edges));
  SolverConfig cfg;
  cfg.k_factor = KFactor(1);
  Rng rng(3);
  EXPECT_GE(estimate_light_vertices(g, Kappa{4}, Direction::out, cfg, rng).size(), 190u);
}

TEST(DecomposeTest, TwoVertexScc) {
  const Graph g = two_cycle(-1, 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const Decomposition d = decompose(g, Kappa{1}, SolverConfig{}, rng);
    EXPECT_EQ(oracle::decomposition_error(g, d), "");
  }
}

TEST(DecomposeTest, DagGivesSingletons) {
  const Graph g = gen_bad_dfs(30);
  Rng rng(4);
  const Decomposition d = decompose(g, Kappa{10}, SolverConfig{}, rng);
  EXPECT_EQ(d.components.size(), g.num_vertices());
  EXPECT_EQ(oracle::decomposition_error(g, d), "");
}

TEST(DecomposeTest, InvariantOnAugRd1) {
  const Graph g = gen_aug(BadFamily::rd1, 100, 5, 7);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const Decomposition d =
        decompose(g, Kappa{static_cast<std::int64_t>(g.num_vertices())}, SolverConfig{}, rng);
    ASSERT_EQ(oracle::decomposition_error(g, d), "") << "seed " << seed;
  }
}

TEST(DecomposeTest, InvariantOnRandomStrongGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = restrict_weights(oracle::random_strong_topology(80, 160, seed), seed);
    Rng rng(seed);
    const Decomposition d = decompose(g, Kappa{20}, SolverConfig{}, rng);
    ASSERT_EQ(oracle::decomposition_error(g, d), "") << "seed " << seed;
  }
}

TEST(DecomposeTest, SameSeedSameOutput) {
  const Graph g = gen_aug(BadFamily::dfs, 200, 5, 1);
  Rng a(11), b(11);
  const Decomposition x = decompose(g, Kappa{60}, SolverConfig{}, a);
  const Decomposition y = decompose(g, Kappa{60}, SolverConfig{}, b);
  EXPECT_TRUE(std::ranges::equal(x.components.flat(), y.components.flat()));
  EXPECT_TRUE(std::ranges::equal(x.components.offsets(), y.components.offsets()));
  EXPECT_TRUE(std::ranges::equal(x.separator.ids(), y.separator.ids()));
}

TEST(RestrictedSsspTest, BaseCaseMatchesLazy) {
  const Graph g = restrict_weights(oracle::random_strong_topology(50, 100, 2), 2);
  Rng rng(1);
  const auto a = restricted_sssp(g, Potential(50), Kappa{50}, SolverConfig{}, rng);
  const auto b = lazy_dijkstra(g, Potential(50));
  ASSERT_TRUE(a && b);
  EXPECT_EQ(*a, *b);
}

TEST(RestrictedSsspTest, AugBfct) {
  const Graph g = gen_aug(BadFamily::bfct, 500, 5, 3);
  const auto scc = kosaraju_scc(g);
  Rng rng(5);
  SolverStats stats;
  const auto phi = restricted_sssp(g, Potential(g.num_vertices()),
                                   Kappa{static_cast<std::int64_t>(g.num_vertices())},
                                   SolverConfig{}, rng, nullptr, &stats);
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(is_valid_potential(g, *phi));
  EXPECT_GT(stats.decompositions, 0u);
  EXPECT_EQ(solve(g, 0, SolverConfig{}).distances, *oracle::bellman_ford(g, 0));
}

TEST(RestrictedSsspTest, PlantedCycle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = oracle::planted_cycle_graph(60, 300, seed);
    Rng rng(seed);
    EXPECT_FALSE(restricted_sssp(g, Potential(60), Kappa{60}, deep_config(), rng).has_value());
  }
}

TEST(RestrictedSsspTest, DeepRecursionValid) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = restrict_weights(oracle::random_strong_topology(120, 240, seed), seed);
    for (InnerSolver inner : {InnerSolver::lazy_dijkstra, InnerSolver::goldberg_radzik}) {
      SolverConfig cfg = deep_config(seed);
      cfg.inner_solver = inner;
      Rng rng(seed);
      SolverStats stats;
      const auto phi =
          restricted_sssp(g, Potential(120), Kappa{120}, cfg, rng, nullptr, &stats);
      ASSERT_TRUE(phi.has_value());
      EXPECT_TRUE(is_valid_potential(g, *phi));
      // Each level either shrinks below 3/4 or halves kappa.
      const double bound = std::log(120.0) / std::log(4.0 / 3.0) + std::log2(120.0) + 1;
      EXPECT_LE(stats.max_depth, bound);
    }
  }
}

TEST(RestrictedSsspTest, HookSeesFixedPotential) {
  const Graph g = gen_aug(BadFamily::gor, 200, 5, 2);
  const auto scc = kosaraju_scc(g);
  std::size_t largest = 0;
  for (std::size_t i = 0; i < scc.size(); ++i) {
    if (scc[i].size() > scc[largest].size()) largest = i;
  }
  VertexSet c(g.num_vertices(), scc[largest]);
  const Graph sub = induced_subgraph(g, c).graph;
  std::vector<std::uint32_t> depths;
  std::size_t top_size = 0;
  RecursionHooks hooks;
  hooks.before_final_pass = [&](const RecursionEvent& ev) {
    depths.push_back(ev.depth);
    EXPECT_EQ(ev.potential.size(), sub.num_vertices());
    if (ev.depth == 0) top_size = ev.vertices.size();
  };
  Rng rng(1);
  const auto phi = restricted_sssp(sub, Potential(sub.num_vertices()),
                                   Kappa{static_cast<std::int64_t>(sub.num_vertices())},
                                   deep_config(), rng, &hooks);
  ASSERT_TRUE(phi.has_value());
  ASSERT_FALSE(depths.empty());
  EXPECT_EQ(depths.back(), 0u);
  EXPECT_EQ(top_size, sub.num_vertices());
}

TEST(DiameterBoundTest, TwoCycle) {
  const Graph g = two_cycle(-1, 3);
  const Weight b = diameter_upper_bound(g);
  EXPECT_GE(b, 3);
  EXPECT_LE(b, 6);
  EXPECT_EQ(oracle::exhaustive_kappa(g), 1);
  EXPECT_LE(oracle::exhaustive_kappa(g), oracle::exact_nonnegative_diameter(g));
}

TEST(DiameterBoundTest, SmallCases) {
  EXPECT_EQ(diameter_upper_bound(Graph(1, {})), 0);
  EXPECT_EQ(diameter_upper_bound(Graph(2, {{0, 1, 1}})), kInfinity);
  std::vector<Edge> ring;
  for (Vertex v = 0; v < 10; ++v) ring.push_back({v, (v + 1) % 10, 1});
  const Graph g(10, std::move(ring));
  EXPECT_EQ(oracle::exact_nonnegative_diameter(g), 9);
  EXPECT_GE(diameter_upper_bound(g), 9);
  EXPECT_LE(diameter_upper_bound(g), 18);
}

TEST(DiameterBoundTest, BracketsExactDiameter) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = restrict_weights(oracle::random_strong_topology(25, 40, seed), seed);
    const Weight exact = oracle::exact_nonnegative_diameter(g);
    const Weight b = diameter_upper_bound(g);
    EXPECT_GE(b, exact);
    EXPECT_LE(b, 2 * exact);
  }
}

TEST(SolveTest, NonnegativeEqualsDijkstra) {
  const Graph g = oracle::random_mixed_graph(100, 500, 9, 50, 0);
  EXPECT_EQ(solve(g, 3, SolverConfig{}).distances, dijkstra(g, 3));
}

TEST(SolveTest, AugGorMatchesOracle) {
  const Graph g = gen_aug(BadFamily::gor, 100, 5, 1);
  const SsspResult r = solve(g, 0, SolverConfig{});
  ASSERT_FALSE(r.negative_cycle);
  EXPECT_EQ(r.distances, *oracle::bellman_ford(g, 0));
  ASSERT_TRUE(r.potential.has_value());
  EXPECT_TRUE(is_valid_potential(g, *r.potential));
}

TEST(SolveTest, UnreachableCycleStillReported) {
  // Vertex 0 is isolated from the cycle on {1, 2}.
  const Graph g(3, {{1, 2, -3}, {2, 1, 1}});
  EXPECT_TRUE(solve(g, 0, SolverConfig{}).negative_cycle);
  EXPECT_TRUE(solve(Graph(2, {{1, 1, -1}}), 0, SolverConfig{}).negative_cycle);
}

TEST(SolveTest, Degenerate) {
  EXPECT_TRUE(solve(Graph(0, {}), 0, SolverConfig{}).distances.empty());
  EXPECT_THROW(solve(Graph(2, {}), 2, SolverConfig{}), std::out_of_range);
  EXPECT_EQ(solve(Graph(2, {}), 1, SolverConfig{}).distances,
            (std::vector<Weight>{kInfinity, 0}));
}

TEST(SolveTest, OracleAcrossConfigs) {
  std::vector<SolverConfig> cfgs(5);
  cfgs[1].k_factor = KFactor(1);
  cfgs[2].k_factor = KFactor::infinite();
  cfgs[3].use_diameter_bound = false;
  cfgs[3].base_case_threshold = 3;
  cfgs[4].inner_solver = InnerSolver::goldberg_radzik;
  cfgs[4].base_case_threshold = 3;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = oracle::random_mixed_graph(80, 80 + 8 * seed, seed);
    const auto want = oracle::bellman_ford(g, 0);
    ASSERT_TRUE(want.has_value());
    for (const auto& cfg : cfgs) {
      const SsspResult r = solve(g, 0, cfg);
      ASSERT_FALSE(r.negative_cycle);
      EXPECT_EQ(r.distances, *want) << "seed " << seed;
    }
  }
}

TEST(SolveTest, Determinism) {
  const Graph g = gen_aug(BadFamily::rd2, 300, 5, 4);
  SolverConfig cfg = deep_config(77);
  const SolveOutput a = solve_with_stats(g, 0, cfg);
  const SolveOutput b = solve_with_stats(g, 0, cfg);
  EXPECT_EQ(a.result.potential, b.result.potential);
  EXPECT_EQ(a.result.distances, b.result.distances);
  EXPECT_EQ(a.stats.separator_edges, b.stats.separator_edges);
  EXPECT_EQ(a.stats.recursive_calls, b.stats.recursive_calls);
  EXPECT_GT(a.stats.decompositions, 0u);
}

TEST(SolveTest, Timeout) {
  const Graph g = gen_aug(BadFamily::dfs, 20000, 5, 1);
  SolverConfig cfg;
  cfg.deadline = Clock::now() - std::chrono::seconds(1);
  EXPECT_THROW(solve(g, 0, cfg), TimeoutError);
}

}  // namespace
}  // namespace nwsssp
