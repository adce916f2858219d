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

#include <stdexcept>
#include <string>

#include "nwsssp/checked.hpp"
#include "nwsssp/heap.hpp"

namespace nwsssp {

std::vector<Weight> dijkstra(const Graph& g, std::span<const SourceSeed> sources,
                             std::optional<Weight> radius_cap) {
  const Weight cap = radius_cap.value_or(kInfinity - 1);
  std::vector<Weight> dist(g.num_vertices(), kInfinity);
  QuaternaryHeap<Weight, Vertex> heap;
  for (const SourceSeed& s : sources) {
    if (s.vertex >= g.num_vertices()) {
      throw std::out_of_range("dijkstra: source " + std::to_string(s.vertex) +
                              " out of range");
    }
    if (s.distance <= cap && s.distance < dist[s.vertex]) {
      dist[s.vertex] = s.distance;
      heap.push(s.distance, s.vertex);
    }
  }
  while (!heap.empty()) {
    const auto [d, u] = heap.pop();
    if (d != dist[u]) continue;
    for (const Arc& a : g.out_arcs(u)) {
      if (a.weight < 0) {
        throw std::invalid_argument("dijkstra: negative edge " +
                                    std::to_string(a.id));
      }
      const Weight nd = checked_add(d, a.weight);
      if (nd <= cap && nd < dist[a.to]) {
        dist[a.to] = nd;
        heap.push(nd, a.to);
      }
    }
  }
  return dist;
}

std::vector<Weight> dijkstra(const Graph& g, Vertex source) {
  const SourceSeed seed{source, 0};
  return dijkstra(g, std::span<const SourceSeed>(&seed, 1));
}

}  // namespace nwsssp
