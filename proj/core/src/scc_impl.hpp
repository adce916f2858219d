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

// Kosaraju-Sharir over a vertex subset with an arc filter. Iterative DFS, so
// path-shaped graphs with millions of vertices do not overflow the stack.

#ifndef NWSSSP_SRC_SCC_IMPL_HPP_
#define NWSSSP_SRC_SCC_IMPL_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nwsssp/graph.hpp"

namespace nwsssp::detail {

struct FlatComponents {
  std::vector<Vertex> order;
  std::vector<std::uint32_t> offsets{0};

  std::size_t size() const { return offsets.size() - 1; }
  std::span<const Vertex> operator[](std::size_t i) const {
    return {order.data() + offsets[i], order.data() + offsets[i + 1]};
  }
};

// Visit stamps sized to the full graph, reused across calls.
class StampArray {
 public:
  void resize(std::size_t n) { stamps_.assign(n, 0); }

  std::uint32_t fresh() {
    if (++current_ == 0) {
      std::fill(stamps_.begin(), stamps_.end(), 0);
      current_ = 1;
    }
    return current_;
  }
  bool marked(Vertex v, std::uint32_t stamp) const { return stamps_[v] == stamp; }
  void mark(Vertex v, std::uint32_t stamp) { stamps_[v] = stamp; }

 private:
  std::vector<std::uint32_t> stamps_;
  std::uint32_t current_ = 0;
};

struct SccWorkspace {
  StampArray visited;
  std::vector<std::pair<Vertex, std::uint32_t>> stack;
  std::vector<Vertex> postorder;

  explicit SccWorkspace(std::size_t n) { visited.resize(n); }
};

// `keep(from, arc)` decides whether the arc takes part; it is called with
// out-arcs in the first pass and in-arcs in the second, and must return
// false for arcs leaving the subset.
template <typename Keep>
void kosaraju(const Graph& g, std::span<const Vertex> vertices, Keep&& keep,
              SccWorkspace& ws, FlatComponents& out) {
  out.order.clear();
  out.offsets.assign(1, 0);
  ws.postorder.clear();

  const std::uint32_t first = ws.visited.fresh();
  for (Vertex root : vertices) {
    if (ws.visited.marked(root, first)) continue;
    ws.visited.mark(root, first);
    ws.stack.assign(1, {root, 0});
    while (!ws.stack.empty()) {
      auto& [u, pos] = ws.stack.back();
      const auto arcs = g.out_arcs(u);
      bool descended = false;
      while (pos < arcs.size()) {
        const Arc& a = arcs[pos++];
        if (!ws.visited.marked(a.to, first) && keep(u, a)) {
          ws.visited.mark(a.to, first);
          ws.stack.push_back({a.to, 0});
          descended = true;
          break;
        }
      }
      if (!descended) {
        ws.postorder.push_back(ws.stack.back().first);
        ws.stack.pop_back();
      }
    }
  }

  const std::uint32_t second = ws.visited.fresh();
  for (auto it = ws.postorder.rbegin(); it != ws.postorder.rend(); ++it) {
    const Vertex root = *it;
    if (ws.visited.marked(root, second)) continue;
    ws.visited.mark(root, second);
    ws.stack.assign(1, {root, 0});
    out.order.push_back(root);
    while (!ws.stack.empty()) {
      auto& [u, pos] = ws.stack.back();
      const auto arcs = g.in_arcs(u);
      bool descended = false;
      while (pos < arcs.size()) {
        const Arc& a = arcs[pos++];
        if (!ws.visited.marked(a.to, second) && keep(u, a)) {
          ws.visited.mark(a.to, second);
          ws.stack.push_back({a.to, 0});
          out.order.push_back(a.to);
          descended = true;
          break;
        }
      }
      if (!descended) ws.stack.pop_back();
    }
    out.offsets.push_back(static_cast<std::uint32_t>(out.order.size()));
  }
}

}  // namespace nwsssp::detail

#endif  // NWSSSP_SRC_SCC_IMPL_HPP_
