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

#ifndef NWSSSP_BASELINES_HPP_
#define NWSSSP_BASELINES_HPP_

#include <cstdint>
#include <optional>

#include "nwsssp/deadline.hpp"
#include "nwsssp/graph.hpp"
#include "nwsssp/result.hpp"

namespace nwsssp {

struct GorStats {
  // Passes that had at least one vertex to scan.
  std::uint64_t passes = 0;
};

// Goldberg-Radzik: each pass orders the admissible subgraph (reduced cost
// <= 0) reachable from the vertices that can improve a neighbour by DFS,
// then scans it in topological order. More than n passes, or a strictly
// negative admissible arc closing a DFS cycle, means a negative cycle.
//
// Source mode finds cycles reachable from the source only.
SsspResult goldberg_radzik(const Graph& g, Vertex source, GorStats* stats = nullptr,
                           std::optional<Clock::time_point> deadline = std::nullopt);

// Implicit super source with an edge of weight initial[v] to every v.
SsspResult goldberg_radzik(const Graph& g, const Potential& initial,
                           GorStats* stats = nullptr,
                           std::optional<Clock::time_point> deadline = std::nullopt);

// Round-based Bellman-Ford with early exit; verdict if round n still improves.
SsspResult bellman_ford(const Graph& g, Vertex source,
                        std::optional<Clock::time_point> deadline = std::nullopt);

// Zero-weight implicit super source: distances are min(0, min over u of
// dist(u, v)) and every negative cycle is found.
SsspResult bellman_ford_super_source(
    const Graph& g, std::optional<Clock::time_point> deadline = std::nullopt);

}  // namespace nwsssp

#endif  // NWSSSP_BASELINES_HPP_
