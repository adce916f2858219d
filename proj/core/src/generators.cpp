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

#include "nwsssp/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "nwsssp/checked.hpp"
#include "nwsssp/dijkstra.hpp"
#include "nwsssp/rng.hpp"
#include "nwsssp/scc.hpp"

namespace nwsssp {
namespace {

// Rng streams; part of the reproducibility contract.
enum Stream : std::uint64_t {
  kPermutation = 1,
  kNewEdges = 2,
  kTreeRoots = 3,
  kTopology = 4,
  kShiftNoise = 5,
  kGridWeights = 6,
};

constexpr std::uint64_t kMaxK = std::uint64_t{1} << 28;

void check_k(std::uint64_t k, const char* name) {
  if (k < 2) throw std::invalid_argument(std::string(name) + ": k must be at least 2");
  if (k > kMaxK) throw std::invalid_argument(std::string(name) + ": k too large");
}

// 1-based edge helper.
struct EdgeList {
  std::vector<Edge> edges;
  void add(std::uint64_t u, std::uint64_t v, Weight w) {
    edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), w});
  }
};

std::uint64_t key(Vertex u, Vertex v) { return (std::uint64_t{u} << 32) | v; }

// Appends `count` distinct random non-loop edges absent from `taken`.
void add_random_edges(std::size_t n, std::uint64_t count, Weight w, Rng& rng,
                      std::unordered_set<std::uint64_t>& taken, std::vector<Edge>& out) {
  if (count == 0) return;
  const std::uint64_t slots = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1);
  if (slots < taken.size() + count) {
    throw std::invalid_argument("graph too dense for the requested number of edges");
  }
  const std::uint64_t cap = 100 * count;
  std::uint64_t placed = 0;
  for (std::uint64_t attempt = 0; placed < count; ++attempt) {
    if (attempt >= cap) {
      throw std::invalid_argument("rejection sampling gave up: graph too dense");
    }
    const auto u = static_cast<Vertex>(rng.uniform(n));
    const auto v = static_cast<Vertex>(rng.uniform(n));
    if (u == v || !taken.insert(key(u, v)).second) continue;
    out.push_back({u, v, w});
    ++placed;
  }
}

bool is_dag(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (e.tail == e.head) return false;
  }
  return kosaraju_scc(g).size() == g.num_vertices();
}

}  // namespace

std::string_view family_name(BadFamily f) {
  switch (f) {
    case BadFamily::bfct: return "bfct";
    case BadFamily::gor: return "gor";
    case BadFamily::rd1: return "rd1";
    case BadFamily::rd2: return "rd2";
    case BadFamily::dfs: return "dfs";
  }
  return "?";
}

Graph gen_bad_bfct(std::uint64_t k) {
  check_k(k, "bad_bfct");
  EdgeList l;
  for (std::uint64_t i = 1; i <= 3 * k - 3; ++i) l.add(i + 1, i, -1);
  for (std::uint64_t i = 1; i <= k; ++i) l.add(3 * (i - 1) + 1, 3 * k - 1, -1);
  for (std::uint64_t v = 3 * k; v <= 4 * k - 1; ++v) l.add(3 * k - 1, v, -1);
  return Graph(4 * k - 1, std::move(l.edges));
}

Graph gen_bad_gor(std::uint64_t k) {
  check_k(k, "bad_gor");
  const auto kw = static_cast<Weight>(k);
  EdgeList l;
  l.add(1, 2, -3 * kw);
  l.add(1, k + 1, -1);
  for (std::uint64_t i = 2; i <= k - 1; ++i) l.add(i, i + 1, 1);
  for (std::uint64_t i = 2; i <= k; ++i) l.add(i, k + 1, 2 * (kw - static_cast<Weight>(i)));
  for (std::uint64_t i = 1; i <= k; ++i) l.add(k + 1, k + 1 + i, -1);
  return Graph(2 * k + 1, std::move(l.edges));
}

Graph gen_bad_rd1(std::uint64_t k) {
  check_k(k, "bad_rd1");
  EdgeList l;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t x = 2 * i - 1, y = 2 * i;
    l.add(x, y, 0);
    if (i < k) {
      l.add(x, x + 2, -1);
      l.add(y, x + 2, -2);
    }
  }
  return Graph(2 * k, std::move(l.edges));
}

Graph gen_bad_rd2(std::uint64_t k) {
  check_k(k, "bad_rd2");
  const Graph base = gen_bad_rd1(k);
  EdgeList l{std::vector<Edge>(base.edges().begin(), base.edges().end())};
  const std::uint64_t hub = 2 * k + 1;
  for (std::uint64_t i = 1; i <= k; ++i) l.add(2 * i, hub, -1);
  for (std::uint64_t j = 1; j <= k; ++j) l.add(hub, hub + j, -1);
  return Graph(3 * k + 1, std::move(l.edges));
}

Graph gen_bad_dfs(std::uint64_t k) {
  check_k(k, "bad_dfs");
  auto x = [](std::uint64_t i) { return i; };
  auto y = [k](std::uint64_t i) { return k + i; };
  EdgeList l;
  for (std::uint64_t i = 1; i <= k; ++i) {
    l.add(x(i), y(i), -1);
    if (i < k) {
      l.add(x(i), x(i + 1), -1);
      l.add(y(i), x(i + 1), -1);
      l.add(y(i), y(i + 1), -1);
    }
  }
  return Graph(2 * k, std::move(l.edges));
}

Graph gen_bad(BadFamily f, std::uint64_t k) {
  switch (f) {
    case BadFamily::bfct: return gen_bad_bfct(k);
    case BadFamily::gor: return gen_bad_gor(k);
    case BadFamily::rd1: return gen_bad_rd1(k);
    case BadFamily::rd2: return gen_bad_rd2(k);
    case BadFamily::dfs: return gen_bad_dfs(k);
  }
  throw std::invalid_argument("unknown family");
}

Weight augmentation_weight(const Graph& dag) {
  const auto n = static_cast<Weight>(dag.num_vertices());
  const Weight heaviest_drop = std::max<Weight>(checked_sub(0, dag.min_weight()), 1);
  return checked_add(n, checked_mul(std::max<Weight>(n - 1, 0), heaviest_drop));
}

Graph augment(const Graph& dag, std::uint64_t factor, std::uint64_t seed) {
  if (!is_dag(dag)) throw std::invalid_argument("augment: input is not a DAG");
  const std::size_t n = dag.num_vertices();
  const Weight w_aug = augmentation_weight(dag);
  const Rng root(seed);

  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  Rng prng = root.split(kPermutation);
  shuffle(std::span<Vertex>(perm), prng);

  std::vector<Edge> edges;
  edges.reserve(dag.num_edges() * (factor + 1));
  std::unordered_set<std::uint64_t> taken;
  taken.reserve(dag.num_edges() * (factor + 1) * 2);
  for (const Edge& e : dag.edges()) {
    const Edge pe{perm[e.tail], perm[e.head], e.weight};
    taken.insert(key(pe.tail, pe.head));
    edges.push_back(pe);
  }
  Rng erng = root.split(kNewEdges);
  add_random_edges(n, checked_mul(static_cast<Weight>(factor),
                                  static_cast<Weight>(dag.num_edges())),
                   w_aug, erng, taken, edges);
  return Graph(n, std::move(edges));
}

Graph gen_aug(BadFamily f, std::uint64_t k, std::uint64_t factor, std::uint64_t seed) {
  Graph g = gen_bad(f, k);
  if (f == BadFamily::rd1 || f == BadFamily::rd2) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Edge& e : edges) e.weight = std::max<Weight>(e.weight, -1);
    g = Graph(g.num_vertices(), std::move(edges));
  }
  return augment(g, factor, seed);
}

Graph extract_shift_gor(const Graph& aug_gor, const SolverConfig& cfg,
                        std::uint64_t seed) {
  const ComponentList sccs = kosaraju_scc(aug_gor);
  std::size_t largest = 0;
  for (std::size_t i = 1; i < sccs.size(); ++i) {
    if (sccs[i].size() > sccs[largest].size()) largest = i;
  }
  const auto members = sccs.size() ? sccs[largest] : std::span<const Vertex>{};
  const InducedSubgraph sub =
      induced_subgraph(aug_gor, VertexSet(aug_gor.num_vertices(), members));
  const Graph& c = sub.graph;
  const std::size_t n = c.num_vertices();

  Potential phi(n, 0);
  if (n > 1) {
    struct Captured {};
    RecursionHooks hooks;
    hooks.before_final_pass = [&](const RecursionEvent& ev) {
      if (ev.depth != 0) return;
      phi = Potential(std::vector<Weight>(ev.potential.begin(), ev.potential.end()));
      throw Captured{};
    };
    auto kappa = static_cast<std::int64_t>(n);
    if (cfg.use_diameter_bound) kappa = std::min<Weight>(kappa, diameter_upper_bound(c));
    Rng rng(seed);
    try {
      if (!restricted_sssp(c, Potential(n, 0), Kappa{std::max<std::int64_t>(kappa, 1)},
                           cfg, rng, &hooks)) {
        throw std::invalid_argument("extract_shift_gor: input has a negative cycle");
      }
    } catch (const Captured&) {
    }
  }

  std::vector<Edge> edges;
  edges.reserve(n + c.num_edges());
  for (Vertex v = 0; v < n; ++v) edges.push_back({0, v + 1, 0});
  for (const Edge& e : c.edges()) {
    edges.push_back({e.tail + 1, e.head + 1, reduced_weight(e, phi)});
  }
  return Graph(n + 1, std::move(edges));
}

Graph restrict_weights(const Graph& topology, std::uint64_t seed) {
  const std::size_t n = topology.num_vertices();
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> tree(n, kUnset);
  std::vector<Weight> dist(n, 0);

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  Rng rng = Rng(seed).split(kTreeRoots);
  shuffle(std::span<Vertex>(order), rng);

  // All weights are 2, so Dijkstra restricted to unvisited vertices is BFS.
  std::uint32_t trees = 0;
  std::vector<Vertex> queue;
  for (Vertex root : order) {
    if (tree[root] != kUnset) continue;
    const std::uint32_t t = trees++;
    tree[root] = t;
    dist[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (const Arc& a : topology.out_arcs(u)) {
        if (tree[a.to] != kUnset) continue;
        tree[a.to] = t;
        dist[a.to] = dist[u] + 2;
        queue.push_back(a.to);
      }
    }
  }

  std::vector<Edge> edges(topology.edges().begin(), topology.edges().end());
  for (Edge& e : edges) {
    if (tree[e.tail] == tree[e.head]) {
      e.weight = 2 + dist[e.tail] - dist[e.head] - 1;
    } else if (tree[e.tail] > tree[e.head]) {
      e.weight = -1;
    } else {
      throw std::logic_error("restrict_weights: edge into a later tree");
    }
  }
  return Graph(n, std::move(edges));
}

Graph gen_random_restricted(std::uint64_t n, std::uint64_t seed) {
  if (n < 7) throw std::invalid_argument("random_restricted: n must be at least 7");
  if (n > (std::uint64_t{1} << 26)) {
    throw std::invalid_argument("random_restricted: n too large");
  }
  Rng rng = Rng(seed).split(kTopology);
  std::unordered_set<std::uint64_t> taken;
  taken.reserve(12 * n);
  std::vector<Edge> edges;
  edges.reserve(6 * n);
  add_random_edges(n, 6 * n, 2, rng, taken, edges);
  return restrict_weights(Graph(n, std::move(edges)), seed);
}

Graph usa_shift(const Graph& g, Weight w_max, std::uint64_t seed) {
  if (w_max < 0) throw std::invalid_argument("usa_shift: W must be nonnegative");
  if (g.num_vertices() == 0) return g;
  if (g.min_weight() < 0) throw std::invalid_argument("usa_shift: negative input weight");
  std::vector<Weight> phi = dijkstra(g, Vertex{0});
  Weight farthest = 0;
  for (Weight d : phi) {
    if (d != kInfinity) farthest = std::max(farthest, d);
  }
  Rng rng = Rng(seed).split(kShiftNoise);
  for (Weight& p : phi) {
    if (p == kInfinity) p = farthest;
    p = checked_add(p, rng.uniform_int(0, w_max));
  }
  return apply_potential(g, Potential(std::move(phi)));
}

Graph gen_grid(std::uint64_t side, std::uint64_t seed) {
  if (side < 1 || side > (std::uint64_t{1} << 13)) {
    throw std::invalid_argument("grid side out of range");
  }
  Rng rng = Rng(seed).split(kGridWeights);
  std::vector<Edge> edges;
  edges.reserve(4 * side * side);
  auto id = [side](std::uint64_t r, std::uint64_t c) { return static_cast<Vertex>(r * side + c); };
  for (std::uint64_t r = 0; r < side; ++r) {
    for (std::uint64_t c = 0; c < side; ++c) {
      if (c + 1 < side) {
        edges.push_back({id(r, c), id(r, c + 1), rng.uniform_int(1, 100)});
        edges.push_back({id(r, c + 1), id(r, c), rng.uniform_int(1, 100)});
      }
      if (r + 1 < side) {
        edges.push_back({id(r, c), id(r + 1, c), rng.uniform_int(1, 100)});
        edges.push_back({id(r + 1, c), id(r, c), rng.uniform_int(1, 100)});
      }
    }
  }
  return Graph(side * side, std::move(edges));
}

}  // namespace nwsssp
