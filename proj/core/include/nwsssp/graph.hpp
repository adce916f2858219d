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

#ifndef NWSSSP_GRAPH_HPP_
#define NWSSSP_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace nwsssp {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::int64_t;

// Distance of a vertex that cannot be reached. Strictly larger than any
// reachable distance.
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;
  Weight weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// One entry of an adjacency list. For out-arcs `to` is the head of the edge,
// for in-arcs it is the tail.
struct Arc {
  Vertex to = 0;
  EdgeId id = 0;
  Weight weight = 0;
};

// Immutable directed graph with integer weights. Adjacency is stored as
// compressed offset arrays in both directions.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument if an endpoint is out of range or the graph
  // is too large for 32-bit vertex/edge ids.
  Graph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  std::span<const Arc> out_arcs(Vertex v) const {
    return {out_arcs_.data() + out_offsets_[v],
            out_arcs_.data() + out_offsets_[v + 1]};
  }
  std::span<const Arc> in_arcs(Vertex v) const {
    return {in_arcs_.data() + in_offsets_[v],
            in_arcs_.data() + in_offsets_[v + 1]};
  }

  std::size_t out_degree(Vertex v) const {
    return out_offsets_[v + 1] - out_offsets_[v];
  }
  std::size_t in_degree(Vertex v) const {
    return in_offsets_[v + 1] - in_offsets_[v];
  }

  // Smallest edge weight, or 0 for a graph without edges.
  Weight min_weight() const;
  Weight max_weight() const;

  // Same vertex count and identical edge sequence.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Arc> out_arcs_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Arc> in_arcs_;
};

// Edge list sorted by (tail, head, weight); the canonical form used to
// compare graphs up to edge order.
std::vector<Edge> sorted_edges(const Graph& g);

// Vertex potential phi. Reduced weight of (u, v) is w(u, v) + phi(u) - phi(v).
class Potential {
 public:
  Potential() = default;
  explicit Potential(std::size_t n, Weight fill = 0) : values_(n, fill) {}
  explicit Potential(std::vector<Weight> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  Weight operator[](Vertex v) const { return values_[v]; }
  Weight& operator[](Vertex v) { return values_[v]; }

  std::span<const Weight> values() const { return values_; }
  std::span<Weight> values() { return values_; }
  std::vector<Weight> release() && { return std::move(values_); }

  friend bool operator==(const Potential&, const Potential&) = default;

 private:
  std::vector<Weight> values_;
};

// Throws std::overflow_error if the reduced weight does not fit 64 bits.
Weight reduced_weight(const Edge& e, const Potential& phi);

// True iff every reduced weight is nonnegative. Throws std::invalid_argument
// on a size mismatch.
bool is_valid_potential(const Graph& g, const Potential& phi);

// Membership bitmap over 0..universe-1 plus insertion order.
class VertexSet {
 public:
  explicit VertexSet(std::size_t universe = 0) : member_(universe, 0) {}
  VertexSet(std::size_t universe, std::span<const Vertex> vertices);

  // Returns false if v was already present.
  bool insert(Vertex v);
  bool contains(Vertex v) const { return v < member_.size() && member_[v]; }

  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }
  std::size_t universe() const { return member_.size(); }

  std::span<const Vertex> vertices() const { return order_; }
  auto begin() const { return order_.begin(); }
  auto end() const { return order_.end(); }

 private:
  std::vector<std::uint8_t> member_;
  std::vector<Vertex> order_;
};

// Set of edge ids, kept sorted and duplicate free.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<EdgeId> ids);

  bool contains(EdgeId id) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::span<const EdgeId> ids() const { return ids_; }

 private:
  std::vector<EdgeId> ids_;
};

// Every edge flipped.
Graph reversed(const Graph& g);

// Negative weights replaced by zero.
Graph clamp_nonnegative(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // Global id -> local id, kNoVertex for vertices outside the set.
  std::vector<Vertex> to_local;
  // Local id -> global id.
  std::vector<Vertex> to_global;
};

// Subgraph on `c` with local ids assigned in the set's iteration order. Keeps
// exactly the edges with both endpoints in `c`. Throws std::invalid_argument
// for an empty set or a set built for a different universe.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& c);

// Same topology with reduced weights. Cycle weights are unchanged.
Graph apply_potential(const Graph& g, const Potential& phi);

}  // namespace nwsssp

#endif  // NWSSSP_GRAPH_HPP_
