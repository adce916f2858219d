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

#include "nwsssp/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nwsssp/checked.hpp"

namespace nwsssp {

void throw_weight_overflow() {
  throw std::overflow_error("64-bit weight arithmetic overflow");
}

namespace {

void build_csr(std::size_t n, std::span<const Edge> edges, bool outgoing,
               std::vector<std::size_t>& offsets, std::vector<Arc>& arcs) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) ++offsets[(outgoing ? e.tail : e.head) + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  arcs.resize(edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    const Vertex from = outgoing ? e.tail : e.head;
    const Vertex to = outgoing ? e.head : e.tail;
    arcs[cursor[from]++] = Arc{to, static_cast<EdgeId>(id), e.weight};
  }
}

}  // namespace

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ >= kNoVertex) {
    throw std::invalid_argument("too many vertices: " +
                                std::to_string(num_vertices_));
  }
  if (edges_.size() >= std::numeric_limits<EdgeId>::max()) {
    throw std::invalid_argument("too many edges: " +
                                std::to_string(edges_.size()));
  }
  for (const Edge& e : edges_) {
    if (e.tail >= num_vertices_ || e.head >= num_vertices_) {
      throw std::invalid_argument(
          "edge endpoint out of range: (" + std::to_string(e.tail) + ", " +
          std::to_string(e.head) + ") with n=" + std::to_string(num_vertices_));
    }
  }
  build_csr(num_vertices_, edges_, true, out_offsets_, out_arcs_);
  build_csr(num_vertices_, edges_, false, in_offsets_, in_arcs_);
}

Weight Graph::min_weight() const {
  if (edges_.empty()) return 0;
  return std::ranges::min(edges_, {}, &Edge::weight).weight;
}

Weight Graph::max_weight() const {
  if (edges_.empty()) return 0;
  return std::ranges::max(edges_, {}, &Edge::weight).weight;
}

std::vector<Edge> sorted_edges(const Graph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::ranges::sort(edges);
  return edges;
}

Weight reduced_weight(const Edge& e, const Potential& phi) {
  return checked_reduce(e.weight, phi[e.tail], phi[e.head]);
}

bool is_valid_potential(const Graph& g, const Potential& phi) {
  if (phi.size() != g.num_vertices()) {
    throw std::invalid_argument("potential size does not match graph");
  }
  return std::ranges::all_of(
      g.edges(), [&](const Edge& e) { return reduced_weight(e, phi) >= 0; });
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> vertices)
    : member_(universe, 0) {
  for (Vertex v : vertices) insert(v);
}

bool VertexSet::insert(Vertex v) {
  if (v >= member_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " outside universe of size " +
                            std::to_string(member_.size()));
  }
  if (member_[v]) return false;
  member_[v] = 1;
  order_.push_back(v);
  return true;
}

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::ranges::sort(ids_);
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EdgeSet::contains(EdgeId id) const {
  return std::ranges::binary_search(ids_, id);
}

Graph reversed(const Graph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({e.head, e.tail, e.weight});
  return Graph(g.num_vertices(), std::move(edges));
}

Graph clamp_nonnegative(const Graph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.weight = std::max<Weight>(e.weight, 0);
  return Graph(g.num_vertices(), std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& c) {
  if (c.empty()) throw std::invalid_argument("induced_subgraph: empty set");
  if (c.universe() != g.num_vertices()) {
    throw std::invalid_argument("induced_subgraph: universe mismatch");
  }
  InducedSubgraph sub;
  sub.to_local.assign(g.num_vertices(), kNoVertex);
  sub.to_global.assign(c.begin(), c.end());
  for (std::size_t i = 0; i < sub.to_global.size(); ++i) {
    sub.to_local[sub.to_global[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : c) {
    for (const Arc& a : g.out_arcs(u)) {
      if (c.contains(a.to)) {
        edges.push_back({sub.to_local[u], sub.to_local[a.to], a.weight});
      }
    }
  }
  sub.graph = Graph(sub.to_global.size(), std::move(edges));
  return sub;
}

Graph apply_potential(const Graph& g, const Potential& phi) {
  if (phi.size() != g.num_vertices()) {
    throw std::invalid_argument("potential size does not match graph");
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.weight = reduced_weight(e, phi);
  return Graph(g.num_vertices(), std::move(edges));
}

}  // namespace nwsssp
