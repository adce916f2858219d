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

// Goldberg-Radzik scanning over a "view" of the graph: a membership test
// plus a weight function, so the same kernel runs on whole graphs, on
// potential-reduced graphs and on labelled subproblems without copying.

#ifndef NWSSSP_SRC_GOR_IMPL_HPP_
#define NWSSSP_SRC_GOR_IMPL_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nwsssp/checked.hpp"
#include "nwsssp/deadline.hpp"
#include "nwsssp/graph.hpp"
#include "scc_impl.hpp"

namespace nwsssp::detail {

struct WholeGraph {
  bool operator()(Vertex) const { return true; }
};

struct Labelled {
  const std::uint32_t* label;
  std::uint32_t id;
  bool operator()(Vertex v) const { return label[v] == id; }
};

template <typename Member>
struct PlainView {
  Member member;
  bool contains(Vertex v) const { return member(v); }
  Weight weight(Vertex, const Arc& a) const { return a.weight; }
};

template <typename Member>
struct ReducedView {
  Member member;
  const Weight* phi;
  bool contains(Vertex v) const { return member(v); }
  Weight weight(Vertex u, const Arc& a) const {
    return checked_reduce(a.weight, phi[u], phi[a.to]);
  }
};

class GorWorkspace {
 public:
  enum : std::uint8_t { kIdle = 0, kLabelled = 1, kQueued = 2 };

  explicit GorWorkspace(std::size_t n)
      : dist(n, kInfinity), state(n, kIdle), on_stack(n, 0) {
    visited.resize(n);
  }

  std::vector<Weight> dist;  // kInfinity outside a run
  std::vector<std::uint8_t> state;
  std::vector<std::uint8_t> on_stack;
  StampArray visited;
  std::vector<Vertex> labelled, roots, postorder;
  std::vector<std::pair<Vertex, std::uint32_t>> stack;
};

// Runs to completion from the labels already written into ws.dist for the
// vertices in ws.labelled (marked kLabelled). Returns false on a negative
// cycle. `n` is the number of vertices in the view; more than n passes with
// work left means a cycle.
template <typename View>
bool run_gor(const Graph& g, const View& view, std::size_t n, GorWorkspace& ws,
             DeadlineGuard& guard, std::uint64_t* passes_out) {
  auto& dist = ws.dist;
  std::uint64_t passes = 0;
  bool ok = true;

  while (!ws.labelled.empty()) {
    // Roots: labelled vertices with an improving out-arc.
    ws.roots.clear();
    for (Vertex v : ws.labelled) {
      ws.state[v] = GorWorkspace::kIdle;
      if (dist[v] == kInfinity) continue;
      for (const Arc& a : g.out_arcs(v)) {
        if (!view.contains(a.to)) continue;
        const Weight nd = checked_add(dist[v], view.weight(v, a));
        if (nd < dist[a.to]) {
          ws.roots.push_back(v);
          break;
        }
      }
    }
    ws.labelled.clear();
    if (ws.roots.empty()) break;
    if (++passes > n) {
      ok = false;
      break;
    }

    // Admissible graph: arcs with reduced cost <= 0 under current labels.
    // Unreached vertices are leaves.
    const std::uint32_t stamp = ws.visited.fresh();
    ws.postorder.clear();
    for (Vertex root : ws.roots) {
      if (ws.visited.marked(root, stamp)) continue;
      ws.visited.mark(root, stamp);
      ws.on_stack[root] = 1;
      ws.stack.assign(1, {root, 0});
      while (ok && !ws.stack.empty()) {
        auto& [u, pos] = ws.stack.back();
        const auto arcs = g.out_arcs(u);
        bool descended = false;
        while (pos < arcs.size()) {
          const Arc& a = arcs[pos++];
          if (!view.contains(a.to)) continue;
          const Weight nd = checked_add(dist[u], view.weight(u, a));
          if (nd > dist[a.to]) continue;
          if (ws.on_stack[a.to]) {
            if (nd < dist[a.to]) {
              ok = false;
              break;
            }
            continue;
          }
          if (ws.visited.marked(a.to, stamp)) continue;
          ws.visited.mark(a.to, stamp);
          if (dist[a.to] == kInfinity) {
            ws.postorder.push_back(a.to);
            continue;
          }
          ws.on_stack[a.to] = 1;
          ws.stack.push_back({a.to, 0});
          descended = true;
          break;
        }
        if (!ok) break;
        if (!descended) {
          const Vertex done = ws.stack.back().first;
          ws.on_stack[done] = 0;
          ws.postorder.push_back(done);
          ws.stack.pop_back();
        }
      }
      if (!ok) break;
    }
    if (!ok) {
      for (const auto& [v, pos] : ws.stack) ws.on_stack[v] = 0;
      ws.stack.clear();
      break;
    }

    // Scan in topological order of the admissible graph.
    for (Vertex v : ws.postorder) ws.state[v] = GorWorkspace::kQueued;
    for (auto it = ws.postorder.rbegin(); it != ws.postorder.rend(); ++it) {
      const Vertex v = *it;
      ws.state[v] = GorWorkspace::kIdle;
      guard.tick();
      if (dist[v] == kInfinity) continue;
      for (const Arc& a : g.out_arcs(v)) {
        if (!view.contains(a.to)) continue;
        const Weight nd = checked_add(dist[v], view.weight(v, a));
        if (nd < dist[a.to]) {
          dist[a.to] = nd;
          if (ws.state[a.to] == GorWorkspace::kIdle) {
            ws.state[a.to] = GorWorkspace::kLabelled;
            ws.labelled.push_back(a.to);
          }
        }
      }
    }
  }

  for (Vertex v : ws.labelled) ws.state[v] = GorWorkspace::kIdle;
  ws.labelled.clear();
  if (passes_out) *passes_out += passes;
  return ok;
}

}  // namespace nwsssp::detail

#endif  // NWSSSP_SRC_GOR_IMPL_HPP_
