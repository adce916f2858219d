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

#include "nwsssp/dijkstra.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "oracles.hpp"

namespace nwsssp {
namespace {

TEST(DijkstraTest, Path) {
  const Graph g(3, {{0, 1, 1}, {1, 2, 1}});
  EXPECT_EQ(dijkstra(g, 0), (std::vector<Weight>{0, 1, 2}));
  EXPECT_EQ(dijkstra(g, 2), (std::vector<Weight>{kInfinity, kInfinity, 0}));
}

TEST(DijkstraTest, RadiusCap) {
  const Graph g(3, {{0, 1, 1}, {1, 2, 1}});
  const SourceSeed s{0, 0};
  const auto d = dijkstra(g, std::span<const SourceSeed>(&s, 1), Weight{1});
  EXPECT_EQ(d, (std::vector<Weight>{0, 1, kInfinity}));
}

TEST(DijkstraTest, MultiSource) {
  const Graph g(4, {{0, 2, 10}, {1, 2, 1}, {2, 3, 2}});
  const std::vector<SourceSeed> seeds{{0, 0}, {1, 5}};
  EXPECT_EQ(dijkstra(g, seeds), (std::vector<Weight>{0, 5, 6, 8}));
}

TEST(DijkstraTest, MatchesBellmanFord) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = oracle::random_mixed_graph(50, 300, seed, 30, 0);
    ASSERT_GE(g.min_weight(), 0);
    const auto want = oracle::bellman_ford(g, 0);
    ASSERT_TRUE(want.has_value());
    EXPECT_EQ(dijkstra(g, 0), *want);
  }
}

TEST(DijkstraTest, NegativeEdgeSignalled) {
  const Graph g(2, {{0, 1, -1}});
  EXPECT_THROW(dijkstra(g, 0), std::invalid_argument);
}

TEST(DijkstraTest, BadSource) {
  EXPECT_THROW(dijkstra(Graph(2, {}), 5), std::out_of_range);
}

}  // namespace
}  // namespace nwsssp
