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

#include "nwsssp/generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "nwsssp/dijkstra.hpp"
#include "nwsssp/karp.hpp"
#include "nwsssp/scc.hpp"
#include "oracles.hpp"

namespace nwsssp {
namespace {

constexpr BadFamily kAll[] = {BadFamily::bfct, BadFamily::gor, BadFamily::rd1, BadFamily::rd2,
                              BadFamily::dfs};

struct Size {
  std::uint64_t n, m;
};

Size closed_form(BadFamily f, std::uint64_t k) {
  switch (f) {
    case BadFamily::bfct: return {4 * k - 1, 5 * k - 3};
    case BadFamily::gor: return {2 * k + 1, 3 * k - 1};
    case BadFamily::rd1: return {2 * k, 3 * k - 2};
    case BadFamily::rd2: return {3 * k + 1, 5 * k - 2};
    case BadFamily::dfs: return {2 * k, 4 * k - 3};
  }
  return {0, 0};
}

Weight weight_of(const Graph& g, Vertex u, Vertex v) {
  for (const Arc& a : g.out_arcs(u)) {
    if (a.to == v) return a.weight;
  }
  ADD_FAILURE() << "no edge " << u << "->" << v;
  return 0;
}

TEST(BadFamiliesTest, ClosedFormSizes) {
  for (BadFamily f : kAll) {
    for (std::uint64_t k = 2; k <= 200; ++k) {
      const Graph g = gen_bad(f, k);
      const Size s = closed_form(f, k);
      ASSERT_EQ(g.num_vertices(), s.n) << family_name(f) << " k=" << k;
      ASSERT_EQ(g.num_edges(), s.m) << family_name(f) << " k=" << k;
    }
  }
}

TEST(BadFamiliesTest, AllDags) {
  for (BadFamily f : kAll) {
    for (std::uint64_t k : {2, 5, 50}) {
      const Graph g = gen_bad(f, k);
      EXPECT_EQ(kosaraju_scc(g).size(), g.num_vertices()) << family_name(f);
      EXPECT_TRUE(oracle::is_dag(g));
    }
  }
}

TEST(BadFamiliesTest, RejectSmallK) {
  for (BadFamily f : kAll) {
    EXPECT_THROW(gen_bad(f, 1), std::invalid_argument);
    EXPECT_THROW(gen_bad(f, 0), std::invalid_argument);
  }
}

TEST(BadFamiliesTest, Bfct) {
  const Graph g = gen_bad_bfct(2);
  EXPECT_EQ(g.num_vertices(), 7u);
  EXPECT_EQ(g.num_edges(), 7u);
  const Graph h = gen_bad_bfct(4);
  EXPECT_EQ(h.num_vertices(), 15u);
  EXPECT_EQ(h.min_weight(), -1);
  EXPECT_EQ(h.max_weight(), -1);
  EXPECT_TRUE(is_restricted(h).restricted);
  // Hub 3k-1 fans out to every later vertex.
  EXPECT_EQ(h.out_degree(10), 4u);
}

TEST(BadFamiliesTest, Gor) {
  const Graph g = gen_bad_gor(7);
  EXPECT_EQ(g.num_vertices(), 15u);
  EXPECT_EQ(g.num_edges(), 20u);
  EXPECT_EQ(weight_of(g, 0, 1), -21);
  EXPECT_EQ(weight_of(g, 1, 7), 10);
  EXPECT_EQ(weight_of(g, 0, 7), -1);
  EXPECT_EQ(g.min_weight(), -21);
  EXPECT_FALSE(is_restricted(g).weights_ok);
}

TEST(BadFamiliesTest, Rd1) {
  const Graph g = gen_bad_rd1(5);
  EXPECT_EQ(g.num_vertices(), 10u);
  EXPECT_EQ(g.num_edges(), 13u);
  EXPECT_EQ(gen_bad_rd1(2).num_edges(), 4u);
  EXPECT_EQ(g.min_weight(), -2);
  EXPECT_EQ(weight_of(g, 0, 1), 0);
  EXPECT_EQ(weight_of(g, 0, 2), -1);
  EXPECT_EQ(weight_of(g, 1, 2), -2);
}

TEST(BadFamiliesTest, Rd2) {
  const Graph g = gen_bad_rd2(5);
  EXPECT_EQ(g.num_vertices(), 16u);
  EXPECT_EQ(g.num_edges(), 23u);
  const Graph small = gen_bad_rd2(2);
  EXPECT_EQ(small.num_vertices(), 7u);
  EXPECT_EQ(small.num_edges(), 8u);
  EXPECT_EQ(g.out_degree(10), 5u);
  EXPECT_EQ(g.in_degree(10), 5u);
}

TEST(BadFamiliesTest, Dfs) {
  const Graph g = gen_bad_dfs(5);
  EXPECT_EQ(g.num_vertices(), 10u);
  EXPECT_EQ(g.num_edges(), 17u);
  for (const Edge& e : g.edges()) EXPECT_EQ(e.weight, -1);
  EXPECT_TRUE(is_restricted(g).restricted);
  // Lower row x_1..x_k gets ids 0..k-1.
  EXPECT_EQ(weight_of(g, 0, 5), -1);
  EXPECT_EQ(weight_of(g, 5, 6), -1);
}

TEST(AugmentTest, EdgeCount) {
  for (std::uint64_t k : {2, 10, 40}) {
    EXPECT_EQ(augment(gen_bad_bfct(k), 5, 1).num_edges(), 6 * (5 * k - 3));
  }
}

TEST(AugmentTest, Weight) {
  const Graph g = gen_bad_gor(10);
  EXPECT_EQ(augmentation_weight(g), 21 + 20 * 30);
  const Graph a = augment(g, 5, 2);
  for (std::size_t i = g.num_edges(); i < a.num_edges(); ++i) {
    EXPECT_EQ(a.edge(static_cast<EdgeId>(i)).weight, augmentation_weight(g));
    EXPECT_NE(a.edge(static_cast<EdgeId>(i)).tail, a.edge(static_cast<EdgeId>(i)).head);
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : a.edges()) pairs.push_back({e.tail, e.head});
  std::sort(pairs.begin(), pairs.end());
  EXPECT_EQ(std::adjacent_find(pairs.begin(), pairs.end()), pairs.end());
}

// augment emits the relabelled original edges first and in order, which
// exposes the permutation.
std::vector<Vertex> recover_permutation(const Graph& dag, const Graph& aug) {
  std::vector<Vertex> perm(dag.num_vertices(), kNoVertex);
  for (EdgeId i = 0; i < dag.num_edges(); ++i) {
    perm[dag.edge(i).tail] = aug.edge(i).tail;
    perm[dag.edge(i).head] = aug.edge(i).head;
  }
  return perm;
}

TEST(AugmentTest, PreservesShortestPaths) {
  for (BadFamily f : kAll) {
    for (std::uint64_t seed : {1, 2, 3}) {
      Graph dag = gen_bad(f, 40);
      if (f == BadFamily::rd1 || f == BadFamily::rd2) dag = clamp_nonnegative(dag);
      const Graph aug = augment(dag, 5, seed);
      const auto perm = recover_permutation(dag, aug);
      for (Vertex src : {Vertex{0}, Vertex{3}}) {
        const auto before = *oracle::bellman_ford(dag, src);
        const auto after = *oracle::bellman_ford(aug, perm[src]);
        for (Vertex v = 0; v < dag.num_vertices(); ++v) {
          if (before[v] != kInfinity) {
            EXPECT_EQ(after[perm[v]], before[v]) << family_name(f);
          }
        }
      }
    }
  }
}

TEST(AugmentTest, FactorZeroIsRelabelling) {
  const Graph dag = gen_bad_rd1(20);
  const Graph a = augment(dag, 0, 9);
  EXPECT_EQ(a.num_edges(), dag.num_edges());
  const auto perm = recover_permutation(dag, a);
  std::vector<Vertex> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v = 0; v < sorted.size(); ++v) EXPECT_EQ(sorted[v], v);
  const auto before = *oracle::bellman_ford(dag, 0);
  const auto after = *oracle::bellman_ford(a, perm[0]);
  for (Vertex v = 0; v < dag.num_vertices(); ++v) EXPECT_EQ(after[perm[v]], before[v]);
}

TEST(AugmentTest, Errors) {
  EXPECT_THROW(augment(Graph(2, {{0, 1, 1}, {1, 0, 1}}), 1, 1), std::invalid_argument);
  EXPECT_THROW(augment(Graph(3, {{0, 1, 1}}), 10, 1), std::invalid_argument);
}

TEST(AugmentTest, RestrictedExceptGor) {
  for (BadFamily f : kAll) {
    const RestrictedReport r = is_restricted(gen_aug(f, 100, 5, 4));
    EXPECT_TRUE(r.mean_ok) << family_name(f) << ": " << r.reason;
    EXPECT_EQ(r.weights_ok, f != BadFamily::gor) << family_name(f);
  }
}

TEST(AugmentTest, Deterministic) {
  EXPECT_EQ(gen_aug(BadFamily::dfs, 50, 5, 8), gen_aug(BadFamily::dfs, 50, 5, 8));
  EXPECT_NE(gen_aug(BadFamily::dfs, 50, 5, 8), gen_aug(BadFamily::dfs, 50, 5, 9));
}

TEST(ShiftGorTest, Structure) {
  const Graph aug = gen_aug(BadFamily::gor, 300, 5, 1);
  SolverConfig cfg;
  const Graph s = extract_shift_gor(aug, cfg, 1);
  const std::size_t n = s.num_vertices();
  ASSERT_GT(n, 2u);
  EXPECT_EQ(s.out_degree(0), n - 1);
  EXPECT_EQ(s.in_degree(0), 0u);
  EXPECT_FALSE(is_restricted(s).weights_ok);
  EXPECT_LT(s.min_weight(), -1);
  const auto want = oracle::bellman_ford(s, 0);
  ASSERT_TRUE(want.has_value());
  EXPECT_EQ(solve(s, 0, SolverConfig{}).distances, *want);
  EXPECT_EQ(extract_shift_gor(aug, cfg, 1), s);
}

TEST(RandomRestrictedTest, Basics) {
  const Graph g = gen_random_restricted(200, 1);
  EXPECT_EQ(g.num_edges(), 1200u);
  EXPECT_EQ(g.min_weight(), -1);
  EXPECT_TRUE(is_restricted(g).restricted);
  EXPECT_EQ(gen_random_restricted(200, 1), g);
  EXPECT_THROW(gen_random_restricted(6, 1), std::invalid_argument);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges()) {
    EXPECT_NE(e.tail, e.head);
    pairs.push_back({e.tail, e.head});
  }
  std::sort(pairs.begin(), pairs.end());
  EXPECT_EQ(std::adjacent_find(pairs.begin(), pairs.end()), pairs.end());
}

TEST(RandomRestrictedTest, ManySeeds) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RestrictedReport r = is_restricted(gen_random_restricted(7 + seed * 20, seed));
    EXPECT_TRUE(r.restricted) << "seed " << seed << ": " << r.reason;
  }
}

TEST(RestrictWeightsTest, KeepsTopology) {
  const Graph t = oracle::random_strong_topology(30, 60, 2);
  const Graph r = restrict_weights(t, 2);
  ASSERT_EQ(r.num_edges(), t.num_edges());
  for (EdgeId i = 0; i < t.num_edges(); ++i) {
    EXPECT_EQ(r.edge(i).tail, t.edge(i).tail);
    EXPECT_EQ(r.edge(i).head, t.edge(i).head);
  }
  EXPECT_TRUE(is_restricted(r).restricted);
}

// Every reachable v != 0 has an incoming edge with weight in [-w, w].
void expect_tree_edges_within(const Graph& g, Weight w) {
  for (Vertex v = 1; v < g.num_vertices(); ++v) {
    bool found = false;
    for (const Arc& a : g.in_arcs(v)) found = found || (a.weight >= -w && a.weight <= w);
    EXPECT_TRUE(found) << "vertex " << v;
  }
}

TEST(UsaShiftTest, ZeroShift) {
  const Graph base = gen_grid(12, 3);
  const Graph g = usa_shift(base, 0, 1);
  EXPECT_GE(g.min_weight(), 0);
  expect_tree_edges_within(g, 0);
}

TEST(UsaShiftTest, ShiftedWeights) {
  const Graph base = gen_grid(12, 3);
  for (Weight w : {1, 10, 100}) {
    const Graph g = usa_shift(base, w, 5);
    EXPECT_GE(g.min_weight(), -w);
    expect_tree_edges_within(g, w);
    EXPECT_EQ(oracle::bellman_ford(g, 0).has_value(), true);
  }
  EXPECT_TRUE(is_restricted(usa_shift(base, 1, 5)).restricted);
}

TEST(UsaShiftTest, Errors) {
  EXPECT_THROW(usa_shift(Graph(2, {{0, 1, -1}}), 1, 1), std::invalid_argument);
  EXPECT_THROW(usa_shift(gen_grid(3, 1), -1, 1), std::invalid_argument);
}

TEST(GridTest, Shape) {
  const Graph g = gen_grid(5, 1);
  EXPECT_EQ(g.num_vertices(), 25u);
  EXPECT_EQ(g.num_edges(), 2u * 2u * 5u * 4u);
  EXPECT_GE(g.min_weight(), 1);
  EXPECT_LE(g.max_weight(), 100);
  EXPECT_TRUE(oracle::strongly_connected(g));
}

}  // namespace
}  // namespace nwsssp
