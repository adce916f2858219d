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

#ifndef NWSSSP_DIJKSTRA_HPP_
#define NWSSSP_DIJKSTRA_HPP_

#include <optional>
#include <span>
#include <vector>

#include "nwsssp/graph.hpp"

namespace nwsssp {

struct SourceSeed {
  Vertex vertex;
  Weight distance;
};

// Multi-source Dijkstra on a 4-ary heap. Every edge reached must have a
// nonnegative weight; a negative edge raises std::invalid_argument. With a
// radius cap, vertices farther than the cap are reported as kInfinity.
std::vector<Weight> dijkstra(const Graph& g, std::span<const SourceSeed> sources,
                             std::optional<Weight> radius_cap = std::nullopt);

std::vector<Weight> dijkstra(const Graph& g, Vertex source);

}  // namespace nwsssp

#endif  // NWSSSP_DIJKSTRA_HPP_
