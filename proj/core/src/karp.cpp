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

#include "nwsssp/karp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "nwsssp/checked.hpp"
#include "nwsssp/scc.hpp"

namespace nwsssp {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = checked_sub(0, num);
    den = checked_sub(0, den);
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

// Edges with both endpoints in one component, as local (tail, head, w, id).
struct LocalEdge {
  std::uint32_t tail, head;
  Weight weight;
  EdgeId id;
};

// Min cycle mean of one strongly connected piece with at least one edge.
Rational component_mean(std::size_t k, const std::vector<LocalEdge>& edges) {
  // d[j][v]: lightest walk with exactly j edges ending at v, from anywhere.
  std::vector<Weight> d((k + 1) * k, kInfinity);
  std::fill(d.begin(), d.begin() + k, 0);
  for (std::size_t j = 1; j <= k; ++j) {
    const Weight* prev = d.data() + (j - 1) * k;
    Weight* cur = d.data() + j * k;
    for (const LocalEdge& e : edges) {
      if (prev[e.tail] == kInfinity) continue;
      const Weight nd = checked_add(prev[e.tail], e.weight);
      if (nd < cur[e.head]) cur[e.head] = nd;
    }
  }
  std::optional<Rational> best;
  const Weight* last = d.data() + k * k;
  for (std::size_t v = 0; v < k; ++v) {
    if (last[v] == kInfinity) continue;
    std::optional<Rational> worst;
    for (std::size_t j = 0; j < k; ++j) {
      const Weight dj = d[j * k + v];
      if (dj == kInfinity) continue;
      const Rational r(checked_sub(last[v], dj), static_cast<std::int64_t>(k - j));
      if (!worst || r > *worst) worst = r;
    }
    if (worst && (!best || *worst < *best)) best = worst;
  }
  if (!best) throw std::logic_error("karp: strongly connected piece without a cycle");
  return *best;
}

// A cycle of mean exactly p/q: every edge of it is tight under potentials
// that make q*w - p nonnegative.
std::vector<EdgeId> witness(std::size_t k, const std::vector<LocalEdge>& edges,
                            Rational mean) {
  std::vector<Weight> scaled(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    scaled[i] = checked_sub(checked_mul(edges[i].weight, mean.den()), mean.num());
  }
  std::vector<Weight> pot(k, 0);
  for (std::size_t round = 0; round < k; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Weight nd = checked_add(pot[edges[i].tail], scaled[i]);
      if (nd < pot[edges[i].head]) {
        pot[edges[i].head] = nd;
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<std::vector<std::size_t>> tight(k);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (pot[edges[i].tail] + scaled[i] == pot[edges[i].head]) {
      tight[edges[i].tail].push_back(i);
    }
  }
  // Iterative DFS for a back edge in the tight subgraph.
  std::vector<std::uint8_t> color(k, 0);
  std::vector<std::size_t> via(k, 0);
  for (std::uint32_t root = 0; root < k; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [u, pos] = stack.back();
      if (pos == tight[u].size()) {
        color[u] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t ei = tight[u][pos++];
      const std::uint32_t x = edges[ei].head;
      if (color[x] == 0) {
        color[x] = 1;
        via[x] = ei;
        stack.push_back({x, 0});
      } else if (color[x] == 1) {
        std::vector<EdgeId> cycle{edges[ei].id};
        for (std::uint32_t y = u; y != x; y = edges[via[y]].tail) {
          cycle.push_back(edges[via[y]].id);
        }
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
    }
  }
  throw std::logic_error("karp: no tight cycle found");
}

}  // namespace

std::optional<CycleMeanResult> karp_min_cycle_mean(const Graph& g, bool with_witness) {
  const ComponentList sccs = kosaraju_scc(g);
  std::vector<std::uint32_t> local(g.num_vertices(), 0);
  std::vector<std::vector<LocalEdge>> inner(sccs.size());
  for (std::size_t c = 0; c < sccs.size(); ++c) {
    const auto vs = sccs[c];
    for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<std::uint32_t>(i);
  }
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    const auto c = sccs.component_of(e.tail);
    if (c != sccs.component_of(e.head)) continue;
    inner[c].push_back({local[e.tail], local[e.head], e.weight, id});
  }

  std::optional<CycleMeanResult> best;
  std::size_t best_c = 0;
  for (std::size_t c = 0; c < sccs.size(); ++c) {
    if (inner[c].empty()) continue;
    const Rational m = component_mean(sccs[c].size(), inner[c]);
    if (!best || m < best->min_mean) {
      best = CycleMeanResult{m, std::nullopt};
      best_c = c;
    }
  }
  if (best && with_witness) {
    best->witness_cycle = witness(sccs[best_c].size(), inner[best_c], best->min_mean);
  }
  return best;
}

RestrictedReport is_restricted(const Graph& g) {
  RestrictedReport r;
  r.min_weight = g.min_weight();
  r.weights_ok = r.min_weight >= -1;
  const auto mean = karp_min_cycle_mean(g, false);
  if (mean) r.min_mean = mean->min_mean;
  r.mean_ok = !mean || mean->min_mean >= Rational(1);
  r.restricted = r.weights_ok && r.mean_ok;
  if (!r.weights_ok) {
    r.reason = "weight: minimum edge weight " + std::to_string(r.min_weight) + " < -1";
  }
  if (!r.mean_ok) {
    if (!r.reason.empty()) r.reason += "; ";
    r.reason += "mean: minimum cycle mean " + mean->min_mean.str() + " < 1";
  }
  return r;
}

}  // namespace nwsssp
