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

// Slow, obviously-correct reference implementations for tests. None of
// these call into the library except for the Graph container itself.

#ifndef NWSSSP_TESTS_ORACLES_HPP_
#define NWSSSP_TESTS_ORACLES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nwsssp/graph.hpp"
#include "nwsssp/solver.hpp"

namespace nwsssp::oracle {

// Textbook Bellman-Ford over the edge list: n - 1 full rounds, then one
// more to look for a reachable negative cycle (std::nullopt).
std::optional<std::vector<Weight>> bellman_ford(const Graph& g, Vertex source);

// True iff some cycle anywhere in g has negative weight.
bool has_negative_cycle(const Graph& g);

// Recursive Tarjan. Components come out in reverse topological order; each
// component's vertex list is sorted.
std::vector<std::vector<Vertex>> tarjan_scc(const Graph& g);

bool is_dag(const Graph& g);
bool strongly_connected(const Graph& g);

// Floyd-Warshall; kInfinity for unreachable pairs. Assumes no negative
// cycle.
std::vector<std::vector<Weight>> all_pairs(const Graph& g);

// Largest finite distance in g with negative weights clamped to zero.
Weight exact_nonnegative_diameter(const Graph& g);

// Maximum number of negative edges over simple paths of total weight <= 0,
// by enumerating every simple path. Exponential; tiny graphs only.
std::int64_t exhaustive_kappa(const Graph& g);

// Every simple cycle with at most max_len edges, each reported once as an
// edge list starting at its smallest vertex.
std::vector<std::vector<EdgeId>> simple_cycles(const Graph& g, std::size_t max_len);

// Random graph with mixed-sign weights and no negative cycle: nonnegative
// weights in [0, max_w] shifted by a random potential in [-shift, shift].
// Parallel edges and self-loops may appear (self-loops keep a weight >= 0).
Graph random_mixed_graph(std::size_t n, std::size_t m, std::uint64_t seed,
                         Weight max_w = 20, Weight shift = 30);

// Like random_mixed_graph plus one planted cycle of total weight -1 that is
// reachable from vertex 0. Only cycles through the planted -1 edge can be
// negative.
Graph planted_cycle_graph(std::size_t n, std::size_t m, std::uint64_t seed);

// Strongly connected random topology on n vertices: a random Hamiltonian
// cycle plus `extra` random non-loop edges. Weights are 1.
Graph random_strong_topology(std::size_t n, std::size_t extra, std::uint64_t seed);

// Empty string when the decomposition partitions g's vertices and every
// edge is internal, in the separator, or runs forward; otherwise what
// failed.
std::string decomposition_error(const Graph& g, const Decomposition& d);

}  // namespace nwsssp::oracle

#endif  // NWSSSP_TESTS_ORACLES_HPP_
