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

#include "nwsssp/verify.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"

namespace nwsssp {
namespace {

TEST(CertificateTest, AcceptsExactDistances) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = oracle::random_mixed_graph(40, 100, seed);
    const auto d = *oracle::bellman_ford(g, 0);
    EXPECT_TRUE(check_distance_certificate(g, 0, d).ok);
  }
}

TEST(CertificateTest, RejectsPerturbations) {
  const Graph g(3, {{0, 1, 2}, {1, 2, -1}, {0, 2, 4}});
  EXPECT_TRUE(check_distance_certificate(g, 0, std::vector<Weight>{0, 2, 1}).ok);
  EXPECT_FALSE(check_distance_certificate(g, 0, std::vector<Weight>{0, 2, 2}).ok);
  EXPECT_FALSE(check_distance_certificate(g, 0, std::vector<Weight>{0, 2, 0}).ok);
  EXPECT_FALSE(check_distance_certificate(g, 0, std::vector<Weight>{1, 3, 2}).ok);
  EXPECT_FALSE(check_distance_certificate(g, 0, std::vector<Weight>{0, 2, kInfinity}).ok);
  EXPECT_FALSE(check_distance_certificate(g, 0, std::vector<Weight>{0, 2}).ok);
  // Finite but unreachable.
  EXPECT_FALSE(check_distance_certificate(Graph(2, {}), 0, std::vector<Weight>{0, 5}).ok);
  EXPECT_TRUE(check_distance_certificate(Graph(2, {}), 0, std::vector<Weight>{0, kInfinity}).ok);
}

TEST(CertificateTest, ZeroCycleNeedsRealSupport) {
  // A zero cycle 1 <-> 2 unreachable from 0 can be tight without support.
  const Graph g(3, {{1, 2, 0}, {2, 1, 0}});
  EXPECT_FALSE(check_distance_certificate(g, 0, std::vector<Weight>{0, 3, 3}).ok);
}

TEST(PotentialCheckTest, NamesEdge) {
  const Graph g(2, {{0, 1, -1}});
  EXPECT_TRUE(check_potential(g, Potential(std::vector<Weight>{0, -1})).ok);
  const CheckReport r = check_potential(g, Potential(2));
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.message.find("edge"), std::string::npos) << r.message;
}

TEST(MismatchTest, FirstDifference) {
  EXPECT_FALSE(first_mismatch(std::vector<Weight>{1, 2}, std::vector<Weight>{1, 2}).has_value());
  const auto m = first_mismatch(std::vector<Weight>{1, 2, 3}, std::vector<Weight>{1, 5, 4});
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->vertex, 1u);
  EXPECT_EQ(m->expected, 2);
  EXPECT_EQ(m->actual, 5);
  const auto shorter = first_mismatch(std::vector<Weight>{1, 2}, std::vector<Weight>{1});
  ASSERT_TRUE(shorter.has_value());
  EXPECT_EQ(shorter->vertex, 1u);
  EXPECT_EQ(shorter->actual, kInfinity);
}

}  // namespace
}  // namespace nwsssp
