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

// Benchmark instance families. Vertex ids are 0-based; the family
// descriptions in comments use 1-based ids (vertex i is id i-1).

#ifndef NWSSSP_GENERATORS_HPP_
#define NWSSSP_GENERATORS_HPP_

#include <cstdint>
#include <string_view>

#include "nwsssp/graph.hpp"
#include "nwsssp/solver.hpp"

namespace nwsssp {

enum class BadFamily { bfct, gor, rd1, rd2, dfs };

std::string_view family_name(BadFamily f);

// Path 3k-2 -> ... -> 1, edges from 1, 4, ..., 3k-2 into 3k-1, which fans
// out to 3k .. 4k-1. All weights -1. n = 4k-1, m = 5k-3.
Graph gen_bad_bfct(std::uint64_t k);

// w(1,2) = -3k, w(1,k+1) = -1, path 2..k of weight-1 edges, w(i,k+1) =
// 2(k-i), and k+1 fans out to k+2 .. 2k+1 with weight -1.
// n = 2k+1, m = 3k-1.
Graph gen_bad_gor(std::uint64_t k);

// x_i = 2i-1, y_i = 2i; w(x_i,y_i) = 0, w(x_i,x_{i+1}) = -1,
// w(y_i,x_{i+1}) = -2. n = 2k, m = 3k-2.
Graph gen_bad_rd1(std::uint64_t k);

// RD1 plus a hub 2k+1 fed by every y_i and feeding 2k+2 .. 3k+1, new edges
// weight -1. n = 3k+1, m = 5k-2.
Graph gen_bad_rd2(std::uint64_t k);

// RD1 topology plus (y_i, y_{i+1}), all weights -1, relabelled so x_i = i
// and y_i = k+i. n = 2k, m = 4k-3.
Graph gen_bad_dfs(std::uint64_t k);

Graph gen_bad(BadFamily f, std::uint64_t k);

// Weight given to every added edge: large enough that no cycle through it
// has mean below 1 and no shortest path changes.
Weight augmentation_weight(const Graph& dag);

// Randomly relabels the vertices of a DAG and adds factor * m distinct
// random non-loop edges of weight augmentation_weight(g). Throws
// std::invalid_argument if g has a cycle or is too dense.
Graph augment(const Graph& dag, std::uint64_t factor, std::uint64_t seed);

// The AUG-* family: RD1/RD2 get their -2 weights raised to -1 first.
Graph gen_aug(BadFamily f, std::uint64_t k, std::uint64_t factor, std::uint64_t seed);

// Largest SCC of an AUG-GOR instance with the potential the solver holds
// just before its first-level closing pass applied to its weights, plus an
// explicit super source 0 with zero-weight edges to every other vertex.
Graph extract_shift_gor(const Graph& aug_gor, const SolverConfig& cfg,
                        std::uint64_t seed);

// Weights for an arbitrary topology (input weights ignored): shortest-path
// trees of weight-2 edges from random roots, shift by tree distances, zero
// the edges between trees, subtract 1. The result has min weight >= -1 and
// min cycle mean >= 1.
Graph restrict_weights(const Graph& topology, std::uint64_t seed);

// 6n distinct random edges run through restrict_weights. Needs n >= 7.
Graph gen_random_restricted(std::uint64_t n, std::uint64_t seed);

// Potential shift of a nonnegative graph: phi = dist from vertex 0 plus a
// uniform integer in [0, W]. Unreachable vertices use the largest finite
// distance as their base.
Graph usa_shift(const Graph& g, Weight w_max, std::uint64_t seed);

// Bidirected side x side grid with uniform weights in [1, 100]; stands in
// for a road network when no DIMACS file is given.
Graph gen_grid(std::uint64_t side, std::uint64_t seed);

}  // namespace nwsssp

#endif  // NWSSSP_GENERATORS_HPP_
