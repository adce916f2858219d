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

#include "nwsssp/baselines.hpp"

#include <stdexcept>
#include <vector>

#include "nwsssp/checked.hpp"
#include "gor_impl.hpp"

namespace nwsssp {
namespace {

SsspResult run_gor_whole(const Graph& g, detail::GorWorkspace& ws, GorStats* stats,
                         std::optional<Clock::time_point> deadline) {
  DeadlineGuard guard(deadline);
  const detail::PlainView<detail::WholeGraph> view{{}};
  std::uint64_t passes = 0;
  const bool ok = detail::run_gor(g, view, g.num_vertices(), ws, guard, &passes);
  if (stats) stats->passes = passes;
  if (!ok) return SsspResult::cycle();
  SsspResult r;
  r.distances = std::move(ws.dist);
  return r;
}

SsspResult run_bf(const Graph& g, std::vector<Weight> d,
                  std::optional<Clock::time_point> deadline) {
  DeadlineGuard guard(deadline);
  const std::size_t n = g.num_vertices();
  for (std::size_t round = 1; round <= n; ++round) {
    bool changed = false;
    for (const Edge& e : g.edges()) {
      guard.tick();
      if (d[e.tail] == kInfinity) continue;
      const Weight nd = checked_add(d[e.tail], e.weight);
      if (nd < d[e.head]) {
        d[e.head] = nd;
        changed = true;
      }
    }
    if (!changed) {
      SsspResult r;
      r.distances = std::move(d);
      return r;
    }
  }
  return n == 0 ? SsspResult{} : SsspResult::cycle();
}

void check_source(const Graph& g, Vertex source) {
  if (source >= g.num_vertices()) throw std::out_of_range("source vertex out of range");
}

}  // namespace

SsspResult goldberg_radzik(const Graph& g, Vertex source, GorStats* stats,
                           std::optional<Clock::time_point> deadline) {
  check_source(g, source);
  detail::GorWorkspace ws(g.num_vertices());
  ws.dist[source] = 0;
  ws.state[source] = detail::GorWorkspace::kLabelled;
  ws.labelled.push_back(source);
  return run_gor_whole(g, ws, stats, deadline);
}

SsspResult goldberg_radzik(const Graph& g, const Potential& initial, GorStats* stats,
                           std::optional<Clock::time_point> deadline) {
  if (initial.size() != g.num_vertices()) {
    throw std::invalid_argument("initial labels do not match the graph");
  }
  detail::GorWorkspace ws(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    ws.dist[v] = initial[v];
    ws.state[v] = detail::GorWorkspace::kLabelled;
    ws.labelled.push_back(v);
  }
  return run_gor_whole(g, ws, stats, deadline);
}

SsspResult bellman_ford(const Graph& g, Vertex source,
                        std::optional<Clock::time_point> deadline) {
  check_source(g, source);
  std::vector<Weight> d(g.num_vertices(), kInfinity);
  d[source] = 0;
  return run_bf(g, std::move(d), deadline);
}

SsspResult bellman_ford_super_source(const Graph& g,
                                     std::optional<Clock::time_point> deadline) {
  return run_bf(g, std::vector<Weight>(g.num_vertices(), 0), deadline);
}

}  // namespace nwsssp
