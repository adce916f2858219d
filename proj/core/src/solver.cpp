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

#include "nwsssp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "nwsssp/checked.hpp"
#include "nwsssp/heap.hpp"
#include "gor_impl.hpp"
#include "scc_impl.hpp"

namespace nwsssp {

void SolverConfig::validate() const {
  if (base_case_threshold < 3) {
    throw std::invalid_argument("base_case_threshold must be at least 3");
  }
  const auto& c = constants;
  if (!(c.sample_scale > 0) || !(c.geometric_scale > 0) ||
      c.marking_radius_divisor == 0 || c.light_denominator == 0 ||
      c.progress_denominator == 0) {
    throw std::invalid_argument("decomposition constants must be positive");
  }
}

std::uint64_t light_sample_rounds(std::size_t n, const SolverConfig& cfg) {
  if (cfg.k_factor.is_infinite() || n < 2) return 1;
  const double raw =
      std::ceil(cfg.constants.sample_scale * std::log(static_cast<double>(n)));
  const auto samples = static_cast<std::uint64_t>(raw);
  return std::max<std::uint64_t>(1, samples / cfg.k_factor.value());
}

double geometric_rate(std::size_t n, Kappa kappa, const SolverConfig& cfg) {
  if (n < 2) return 1.0;
  const double p = cfg.constants.geometric_scale * std::log(static_cast<double>(n)) /
                   static_cast<double>(std::max<std::int64_t>(kappa.value, 1));
  return std::min(1.0, p);
}

namespace {

struct NegativeCycleFound {};

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

bool trace_enabled() {
  const char* v = std::getenv("NWSSSP_TRACE");
  return v != nullptr && std::string(v) == "1";
}

// All recursion state lives on the original graph: a subproblem is the set
// of vertices carrying one label, and every workspace is indexed by global
// vertex id and restored after use.
class Engine {
 public:
  Engine(const Graph& g, const SolverConfig& cfg, Rng& rng, SolverStats& stats,
         const RecursionHooks* hooks)
      : g_(g),
        cfg_(cfg),
        rng_(rng),
        stats_(stats),
        hooks_(hooks),
        guard_(cfg.deadline),
        trace_(trace_enabled()),
        n_(g.num_vertices()),
        phi_(n_, 0),
        label_(n_, 0),
        ball_dist_(n_, kInfinity),
        marks_(n_, 0),
        alive_pos_(n_, 0),
        sep_flag_(g.num_edges(), 0),
        lazy_dist_(n_, kInfinity),
        settles_(n_, 0),
        gor_(n_),
        scc_(n_) {
    removed_.resize(n_);
  }

  std::vector<Weight>& phi() { return phi_; }

  std::uint32_t new_label() { return ++next_label_; }
  void assign(std::span<const Vertex> vs, std::uint32_t id) {
    for (Vertex v : vs) label_[v] = id;
  }

  // ---- balls in G>=0 restricted to live vertices of subproblem `id` ----

  template <typename Alive>
  void grow_ball(Vertex center, Direction dir, Weight radius, Alive&& alive) {
    ball_.clear();
    heap_.clear();
    ball_dist_[center] = 0;
    ball_.push_back(center);
    heap_.push(0, center);
    while (!heap_.empty()) {
      const auto [d, u] = heap_.pop();
      if (d != ball_dist_[u]) continue;
      guard_.tick();
      const auto arcs = dir == Direction::out ? g_.out_arcs(u) : g_.in_arcs(u);
      for (const Arc& a : arcs) {
        // Radius first: it needs only the arc, the rest touches a.to.
        const Weight nd = d + std::max<Weight>(a.weight, 0);
        if (nd > radius || !alive(a.to) || nd >= ball_dist_[a.to]) continue;
        if (ball_dist_[a.to] == kInfinity) ball_.push_back(a.to);
        ball_dist_[a.to] = nd;
        heap_.push(nd, a.to);
      }
    }
  }

  void clear_ball() {
    for (Vertex v : ball_) ball_dist_[v] = kInfinity;
  }

  Weight ball_eccentricity() const {
    Weight e = 0;
    for (Vertex v : ball_) e = std::max(e, ball_dist_[v]);
    return e;
  }

  Weight diameter_bound(std::span<const Vertex> vs, std::uint32_t id) {
    if (vs.size() < 2) return 0;
    auto member = [&](Vertex v) { return label_[v] == id; };
    Weight total = 0;
    for (Direction dir : {Direction::out, Direction::in}) {
      grow_ball(vs[0], dir, kInfinity - 1, member);
      const bool all = ball_.size() == vs.size();
      const Weight e = ball_eccentricity();
      clear_ball();
      if (!all) return kInfinity;
      total = checked_add(total, e);
    }
    return total;
  }

  // ---- lightness sampling over the working set alive_ ----

  template <typename Alive>
  void mark_light(Direction dir, std::int64_t kappa, std::uint64_t rounds,
                  Alive&& alive, std::vector<Vertex>& light) {
    light.clear();
    if (alive_.empty()) return;
    const Weight radius = ceil_div(kappa, cfg_.constants.marking_radius_divisor);
    touched_.clear();
    for (std::uint64_t i = 0; i < rounds; ++i) {
      const Vertex v = alive_[rng_.uniform(alive_.size())];
      grow_ball(v, opposite(dir), radius, alive);
      for (Vertex u : ball_) {
        if (marks_[u]++ == 0) touched_.push_back(u);
      }
      clear_ball();
    }
    const auto& c = cfg_.constants;
    for (Vertex u : alive_) {
      if (static_cast<std::uint64_t>(marks_[u]) * c.light_denominator <
          rounds * c.light_numerator) {
        light.push_back(u);
      }
    }
    for (Vertex u : touched_) marks_[u] = 0;
  }

  void start_working_set(std::span<const Vertex> vs) {
    alive_.assign(vs.begin(), vs.end());
    for (std::size_t i = 0; i < alive_.size(); ++i) {
      alive_pos_[alive_[i]] = static_cast<std::uint32_t>(i);
    }
    removed_stamp_ = removed_.fresh();
  }

  bool is_removed(Vertex v) const { return removed_.marked(v, removed_stamp_); }

  void remove_from_working_set(Vertex v) {
    removed_.mark(v, removed_stamp_);
    const std::uint32_t pos = alive_pos_[v];
    const Vertex last = alive_.back();
    alive_[pos] = last;
    alive_pos_[last] = pos;
    alive_.pop_back();
  }

  std::vector<Vertex> light_vertices(std::span<const Vertex> vs, std::uint32_t id,
                                     std::int64_t kappa, Direction dir) {
    start_working_set(vs);
    auto alive = [&](Vertex x) { return label_[x] == id; };
    std::vector<Vertex> light;
    mark_light(dir, kappa, light_sample_rounds(vs.size(), cfg_), alive, light);
    return light;
  }

  // ---- decomposition ----

  void decompose(std::span<const Vertex> vs, std::uint32_t id, std::int64_t kappa,
                 detail::FlatComponents& comps, std::vector<EdgeId>& sep) {
    ++stats_.decompositions;
    const std::size_t n = vs.size();
    const std::uint64_t rounds = light_sample_rounds(n, cfg_);
    const double p = geometric_rate(n, Kappa{kappa}, cfg_);
    sep.clear();
    start_working_set(vs);
    auto alive = [&](Vertex x) { return label_[x] == id && !is_removed(x); };

    std::vector<Vertex> light;
    for (Direction dir : {Direction::in, Direction::out}) {
      mark_light(dir, kappa, rounds, alive, light);
      for (Vertex v : light) {
        if (is_removed(v)) continue;
        const auto r = static_cast<Weight>(rng_.geometric(p, n));
        grow_ball(v, dir, r, alive);
        for (Vertex u : ball_) {
          const auto arcs = dir == Direction::out ? g_.out_arcs(u) : g_.in_arcs(u);
          for (const Arc& a : arcs) {
            if (alive(a.to) && ball_dist_[a.to] == kInfinity) sep.push_back(a.id);
          }
        }
        clear_ball();
        for (Vertex u : ball_) remove_from_working_set(u);
      }
    }
    stats_.separator_edges += sep.size();

    for (EdgeId e : sep) sep_flag_[e] = 1;
    detail::kosaraju(
        g_, vs,
        [&](Vertex, const Arc& a) { return label_[a.to] == id && !sep_flag_[a.id]; },
        scc_, comps);
    for (EdgeId e : sep) sep_flag_[e] = 0;
  }

  // phi(v) += i * M over the components, M from the edges inside the
  // subproblem minus the separator (all edges when sep is empty).
  void fix_dag(const detail::FlatComponents& comps, std::span<const EdgeId> sep,
               std::span<const Vertex> vs, std::uint32_t id) {
    for (EdgeId e : sep) sep_flag_[e] = 1;
    Weight lowest = 0;
    for (Vertex u : vs) {
      for (const Arc& a : g_.out_arcs(u)) {
        if (label_[a.to] != id || sep_flag_[a.id]) continue;
        lowest = std::min(lowest, checked_reduce(a.weight, phi_[u], phi_[a.to]));
      }
    }
    for (EdgeId e : sep) sep_flag_[e] = 0;
    const Weight m = checked_sub(lowest, 1);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const Weight shift = checked_mul(static_cast<Weight>(i + 1), m);
      for (Vertex v : comps[i]) phi_[v] = checked_add(phi_[v], shift);
    }
  }

  // ---- inner solvers: phi <- phi + dist from an implicit super source ----

  bool lazy(std::span<const Vertex> vs, std::uint32_t id) {
    const detail::ReducedView<detail::Labelled> view{{label_.data(), id}, phi_.data()};
    const std::size_t n = vs.size();
    heap_.clear();
    for (Vertex v : vs) {
      lazy_dist_[v] = checked_sub(0, phi_[v]);
      settles_[v] = 0;
      heap_.push(lazy_dist_[v], v);
    }
    bool ok = true;
    while (ok && !heap_.empty()) {
      ++stats_.lazy_phases;
      settled_.clear();
      while (!heap_.empty()) {
        const auto [d, u] = heap_.pop();
        if (d != lazy_dist_[u]) continue;
        guard_.tick();
        if (++settles_[u] > n) {
          ok = false;
          break;
        }
        settled_.push_back(u);
        for (const Arc& a : g_.out_arcs(u)) {
          if (!view.contains(a.to)) continue;
          const Weight w = view.weight(u, a);
          if (w < 0) continue;
          const Weight nd = checked_add(d, w);
          if (nd < lazy_dist_[a.to]) {
            lazy_dist_[a.to] = nd;
            heap_.push(nd, a.to);
          }
        }
      }
      if (!ok) break;
      for (Vertex u : settled_) {
        for (const Arc& a : g_.out_arcs(u)) {
          if (!view.contains(a.to)) continue;
          const Weight w = view.weight(u, a);
          if (w >= 0) continue;
          const Weight nd = checked_add(lazy_dist_[u], w);
          if (nd < lazy_dist_[a.to]) {
            lazy_dist_[a.to] = nd;
            heap_.push(nd, a.to);
          }
        }
      }
    }
    heap_.clear();
    if (ok) {
      for (Vertex v : vs) phi_[v] = checked_add(phi_[v], lazy_dist_[v]);
    }
    for (Vertex v : vs) lazy_dist_[v] = kInfinity;
    return ok;
  }

  bool gor(std::span<const Vertex> vs, std::uint32_t id) {
    const detail::ReducedView<detail::Labelled> view{{label_.data(), id}, phi_.data()};
    for (Vertex v : vs) {
      gor_.dist[v] = 0;
      gor_.state[v] = detail::GorWorkspace::kLabelled;
    }
    gor_.labelled.assign(vs.begin(), vs.end());
    const bool ok = detail::run_gor(g_, view, vs.size(), gor_, guard_, nullptr);
    if (ok) {
      for (Vertex v : vs) phi_[v] = checked_add(phi_[v], gor_.dist[v]);
    }
    for (Vertex v : vs) gor_.dist[v] = kInfinity;
    return ok;
  }

  void inner(std::span<const Vertex> vs, std::uint32_t id) {
    ++stats_.inner_solver_calls;
    const bool ok = cfg_.inner_solver == InnerSolver::lazy_dijkstra ? lazy(vs, id)
                                                                     : gor(vs, id);
    if (!ok) throw NegativeCycleFound{};
  }

  // ---- recursion ----

  void restricted(std::span<const Vertex> vs, std::uint32_t id, std::int64_t kappa,
                  std::uint32_t depth) {
    guard_.check();
    ++stats_.recursive_calls;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    const std::size_t n = vs.size();
    if (n + static_cast<std::uint64_t>(kappa) <= cfg_.base_case_threshold ||
        kappa <= 2) {
      ++stats_.base_cases;
      inner(vs, id);
      return;
    }

    detail::FlatComponents comps;
    std::vector<EdgeId> sep;
    decompose(vs, id, kappa, comps, sep);

    if (trace_) {
      std::size_t largest = 0;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        largest = std::max(largest, comps[i].size());
      }
      std::fprintf(stderr,
                   "trace depth=%u n=%zu kappa=%lld components=%zu largest=%zu "
                   "separator=%zu\n",
                   depth, n, static_cast<long long>(kappa), comps.size(), largest,
                   sep.size());
    }

    const auto& c = cfg_.constants;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto piece = comps[i];
      if (piece.size() < 2) continue;
      std::int64_t child_kappa = kappa;
      if (piece.size() * c.progress_denominator >= n * c.progress_numerator) {
        child_kappa = ceil_div(kappa, 2);
      }
      child_kappa = std::min<std::int64_t>(child_kappa, piece.size());
      const std::uint32_t child = new_label();
      assign(piece, child);
      try {
        restricted(piece, child, child_kappa, depth + 1);
      } catch (...) {
        assign(piece, id);
        throw;
      }
      assign(piece, id);
    }

    fix_dag(comps, sep, vs, id);
    if (hooks_ && hooks_->before_final_pass) {
      hooks_->before_final_pass(RecursionEvent{depth, vs, phi_});
    }
    inner(vs, id);
  }

  DeadlineGuard& guard() { return guard_; }

 private:
  const Graph& g_;
  const SolverConfig& cfg_;
  Rng& rng_;
  SolverStats& stats_;
  const RecursionHooks* hooks_;
  DeadlineGuard guard_;
  bool trace_;
  std::size_t n_;

  std::vector<Weight> phi_;
  std::vector<std::uint32_t> label_;
  std::uint32_t next_label_ = 0;

  QuaternaryHeap<Weight, Vertex> heap_;
  std::vector<Weight> ball_dist_;
  std::vector<Vertex> ball_;
  std::vector<std::uint32_t> marks_;
  std::vector<Vertex> touched_;
  std::vector<Vertex> alive_;
  std::vector<std::uint32_t> alive_pos_;
  detail::StampArray removed_;
  std::uint32_t removed_stamp_ = 0;
  std::vector<std::uint8_t> sep_flag_;

  std::vector<Weight> lazy_dist_;
  std::vector<std::uint32_t> settles_;
  std::vector<Vertex> settled_;
  detail::GorWorkspace gor_;
  detail::SccWorkspace scc_;
};

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> all(g.num_vertices());
  std::iota(all.begin(), all.end(), Vertex{0});
  return all;
}

void check_potential_size(const Graph& g, const Potential& phi) {
  if (phi.size() != g.num_vertices()) {
    throw std::invalid_argument("potential size does not match the graph");
  }
}

}  // namespace

std::optional<Potential> lazy_dijkstra(const Graph& g, const Potential& phi,
                                       SolverStats* stats) {
  check_potential_size(g, phi);
  SolverConfig cfg;
  Rng rng(0);
  SolverStats local;
  Engine e(g, cfg, rng, stats ? *stats : local, nullptr);
  std::ranges::copy(phi.values(), e.phi().begin());
  const auto all = all_vertices(g);
  const std::uint32_t id = e.new_label();
  e.assign(all, id);
  if (!e.lazy(all, id)) return std::nullopt;
  return Potential(std::move(e.phi()));
}

Potential fix_dag_edges(const Graph& g, const ComponentList& components,
                        const Potential& phi) {
  check_potential_size(g, phi);
  if (components.universe() != g.num_vertices()) {
    throw std::invalid_argument("component list does not match the graph");
  }
#ifndef NDEBUG
  for (const Edge& e : g.edges()) {
    const auto c = components.component_of(e.tail);
    if (c != ComponentList::kNone && c == components.component_of(e.head) &&
        reduced_weight(e, phi) < 0) {
      throw std::logic_error("fix_dag_edges: negative edge inside a component");
    }
  }
#endif
  Weight lowest = 0;
  for (const Edge& e : g.edges()) lowest = std::min(lowest, reduced_weight(e, phi));
  const Weight m = checked_sub(lowest, 1);
  Potential out = phi;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const Weight shift = checked_mul(static_cast<Weight>(i + 1), m);
    for (Vertex v : components[i]) out[v] = checked_add(out[v], shift);
  }
  return out;
}

VertexSet estimate_light_vertices(const Graph& g, Kappa kappa, Direction dir,
                                  const SolverConfig& cfg, Rng& rng) {
  cfg.validate();
  SolverStats stats;
  Engine e(g, cfg, rng, stats, nullptr);
  const auto all = all_vertices(g);
  const std::uint32_t id = e.new_label();
  e.assign(all, id);
  const auto light = e.light_vertices(all, id, std::max<std::int64_t>(kappa.value, 1), dir);
  return VertexSet(g.num_vertices(), light);
}

Decomposition decompose(const Graph& g, Kappa kappa, const SolverConfig& cfg,
                        Rng& rng) {
  cfg.validate();
  SolverStats stats;
  Engine e(g, cfg, rng, stats, nullptr);
  const auto all = all_vertices(g);
  const std::uint32_t id = e.new_label();
  e.assign(all, id);
  detail::FlatComponents comps;
  std::vector<EdgeId> sep;
  e.decompose(all, id, std::max<std::int64_t>(kappa.value, 1), comps, sep);
  return Decomposition{
      ComponentList(g.num_vertices(), std::move(comps.order), std::move(comps.offsets)),
      EdgeSet(std::move(sep))};
}

std::optional<Potential> restricted_sssp(const Graph& g, const Potential& phi,
                                         Kappa kappa, const SolverConfig& cfg,
                                         Rng& rng, const RecursionHooks* hooks,
                                         SolverStats* stats) {
  cfg.validate();
  check_potential_size(g, phi);
  SolverStats local;
  Engine e(g, cfg, rng, stats ? *stats : local, hooks);
  std::ranges::copy(phi.values(), e.phi().begin());
  const auto all = all_vertices(g);
  if (all.empty()) return Potential{};
  const std::uint32_t id = e.new_label();
  e.assign(all, id);
  const std::int64_t k =
      std::clamp<std::int64_t>(kappa.value, 1, static_cast<std::int64_t>(all.size()));
  try {
    e.restricted(all, id, k, 0);
  } catch (const NegativeCycleFound&) {
    return std::nullopt;
  }
  return Potential(std::move(e.phi()));
}

Weight diameter_upper_bound(const Graph& g) {
  SolverConfig cfg;
  Rng rng(0);
  SolverStats stats;
  Engine e(g, cfg, rng, stats, nullptr);
  const auto all = all_vertices(g);
  const std::uint32_t id = e.new_label();
  e.assign(all, id);
  return e.diameter_bound(all, id);
}

SolveOutput solve_with_stats(const Graph& g, Vertex source, const SolverConfig& cfg) {
  cfg.validate();
  SolveOutput out;
  const std::size_t n = g.num_vertices();
  if (n == 0) return out;
  if (source >= n) throw std::out_of_range("source vertex out of range");

  Rng rng(cfg.rng_seed);
  Engine e(g, cfg, rng, out.stats, nullptr);
  const ComponentList sccs = kosaraju_scc(g);
  detail::FlatComponents flat;
  flat.order.assign(sccs.flat().begin(), sccs.flat().end());
  flat.offsets.assign(sccs.offsets().begin(), sccs.offsets().end());

  try {
    for (std::size_t i = 0; i < sccs.size(); ++i) {
      const auto c = sccs[i];
      const std::uint32_t id = e.new_label();
      e.assign(c, id);
      if (c.size() == 1) {
        for (const Arc& a : g.out_arcs(c[0])) {
          if (a.to == c[0] && a.weight < 0) throw NegativeCycleFound{};
        }
        continue;
      }
      auto kappa = static_cast<std::int64_t>(c.size());
      if (cfg.use_diameter_bound) {
        const Weight bound = e.diameter_bound(c, id);
        if (bound < kappa) kappa = bound;
      }
      kappa = std::max<std::int64_t>(kappa, 1);
      e.restricted(c, id, kappa, 0);
    }
  } catch (const NegativeCycleFound&) {
    out.result = SsspResult::cycle();
    return out;
  }

  // Condensation edges: everything gets the same label, no separator.
  const auto all = all_vertices(g);
  const std::uint32_t top = e.new_label();
  e.assign(all, top);
  e.fix_dag(flat, {}, all, top);

  Potential phi(std::move(e.phi()));
  if (!is_valid_potential(g, phi)) {
    throw std::logic_error("internal error: final potential is not valid");
  }

  // Dijkstra on reduced weights, then undo the reduction.
  std::vector<Weight> d(n, kInfinity);
  QuaternaryHeap<Weight, Vertex> heap;
  DeadlineGuard& guard = e.guard();
  d[source] = 0;
  heap.push(0, source);
  while (!heap.empty()) {
    const auto [du, u] = heap.pop();
    if (du != d[u]) continue;
    guard.tick();
    for (const Arc& a : g.out_arcs(u)) {
      const Weight nd = checked_add(du, checked_reduce(a.weight, phi[u], phi[a.to]));
      if (nd < d[a.to]) {
        d[a.to] = nd;
        heap.push(nd, a.to);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (d[v] != kInfinity) d[v] = checked_add(checked_sub(d[v], phi[source]), phi[v]);
  }
  out.result.distances = std::move(d);
  out.result.potential = std::move(phi);
  return out;
}

SsspResult solve(const Graph& g, Vertex source, const SolverConfig& cfg) {
  return solve_with_stats(g, source, cfg).result;
}

}  // namespace nwsssp
