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

#include "nwsssp_tools/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nwsssp/baselines.hpp"
#include "nwsssp/deadline.hpp"
#include "nwsssp/dimacs.hpp"
#include "nwsssp/verify.hpp"

namespace nwsssp::tools {

Algorithm parse_algorithm(std::string_view name) {
  if (name == "our") return Algorithm::our;
  if (name == "gor") return Algorithm::gor;
  if (name == "bf") return Algorithm::bf;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                              "' (expected our, gor or bf)");
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::our: return "our";
    case Algorithm::gor: return "gor";
    case Algorithm::bf: return "bf";
  }
  return "?";
}

KFactor parse_k_factor(std::string_view text) {
  if (text == "inf" || text == "infinite") return KFactor::infinite();
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || v < 1) {
    throw std::invalid_argument("k-factor must be a positive integer or 'inf', got '" +
                                std::string(text) + "'");
  }
  return KFactor(v);
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::distances: return "distances";
    case Outcome::negative_cycle: return "negative_cycle";
    case Outcome::timeout: return "timeout";
    case Outcome::error: return "error";
  }
  return "?";
}

RunResult run_algorithm(const Graph& g, Vertex source, Algorithm algorithm,
                        const SolverConfig& cfg, double timeout_s) {
  RunResult r;
  std::optional<Clock::time_point> deadline;
  const auto start = Clock::now();
  if (timeout_s > 0) {
    deadline = start + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(timeout_s));
  }
  try {
    switch (algorithm) {
      case Algorithm::our: {
        SolverConfig c = cfg;
        c.deadline = deadline;
        r.result = solve(g, source, c);
        break;
      }
      case Algorithm::gor:
        r.result = goldberg_radzik(g, source, nullptr, deadline);
        break;
      case Algorithm::bf:
        r.result = bellman_ford(g, source, deadline);
        break;
    }
    r.outcome = r.result.negative_cycle ? Outcome::negative_cycle : Outcome::distances;
  } catch (const TimeoutError&) {
    r.outcome = Outcome::timeout;
  } catch (const std::exception& e) {
    r.outcome = Outcome::error;
    r.error = e.what();
  }
  r.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

Graph with_super_source(const Graph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.num_vertices() + g.num_edges());
  for (Vertex v = 0; v < g.num_vertices(); ++v) edges.push_back({0, v + 1, 0});
  for (const Edge& e : g.edges()) edges.push_back({e.tail + 1, e.head + 1, e.weight});
  return Graph(g.num_vertices() + 1, std::move(edges));
}

TimeSummary summarize_times(std::span<const double> times) {
  TimeSummary s;
  if (times.empty()) return s;
  for (double t : times) s.mean += t;
  s.mean /= static_cast<double>(times.size());
  if (times.size() > 1) {
    double ss = 0;
    for (double t : times) ss += (t - s.mean) * (t - s.mean);
    s.sem = std::sqrt(ss / static_cast<double>(times.size() - 1)) /
            std::sqrt(static_cast<double>(times.size()));
  }
  return s;
}

namespace {

std::vector<BenchRow> summarize(const std::vector<BenchRow>& data,
                                std::uint64_t base_seed) {
  std::vector<double> times;
  bool any_done = false;
  for (const auto& r : data) {
    if (r.outcome == "distances" || r.outcome == "negative_cycle") any_done = true;
  }
  std::string outcome = data.front().outcome;
  bool all_valid = true;
  for (const auto& r : data) {
    if (r.outcome != outcome) outcome = "mixed";
    if (r.valid != "true") all_valid = false;
    const bool done = r.outcome == "distances" || r.outcome == "negative_cycle";
    if (done || !any_done) times.push_back(r.wall_time_s);
  }
  const auto [mean, sem] = summarize_times(times);
  BenchRow base = data.front();
  base.seed = base_seed;
  base.outcome = outcome;
  base.valid = outcome == "distances" ? (all_valid ? "true" : "false") : "";
  BenchRow mean_row = base, sem_row = base;
  mean_row.rep = "mean";
  mean_row.wall_time_s = mean;
  sem_row.rep = "sem";
  sem_row.wall_time_s = sem;
  return {mean_row, sem_row};
}

std::vector<BenchRow> bench_instance(const BenchOptions& opt, const InstanceSpec& spec,
                                     const Graph* base, std::ostream* log,
                                     std::mutex& log_mutex) {
  const std::string name = spec.str();
  Graph g = make_instance(spec, base);
  Vertex source = opt.source;
  if (opt.super_source) {
    g = with_super_source(g);
    source = 0;
  }
  std::vector<BenchRow> rows;
  for (Algorithm alg : opt.algorithms) {
    std::vector<BenchRow> group;
    for (std::uint32_t rep = 0; rep < opt.reps; ++rep) {
      SolverConfig cfg = opt.cfg;
      cfg.rng_seed = opt.cfg.rng_seed + rep;
      BenchRow row{name, g.num_vertices(), g.num_edges(), std::string(algorithm_name(alg)),
                   cfg.rng_seed, std::to_string(rep), 0, "", ""};
      if (source >= g.num_vertices()) {
        row.outcome = "error";
      } else {
        const RunResult r = run_algorithm(g, source, alg, cfg, opt.timeout_s);
        row.wall_time_s = r.wall_time_s;
        row.outcome = std::string(outcome_name(r.outcome));
        if (r.outcome == Outcome::distances) {
          row.valid = !opt.validate || check_distance_certificate(g, source, r.result.distances).ok
                          ? "true"
                          : "false";
        }
        if (log) {
          std::lock_guard lock(log_mutex);
          *log << "bench " << name << " " << row.algorithm << " rep " << rep << ": "
               << row.outcome << " " << row.wall_time_s << " s"
               << (r.error.empty() ? "" : " (" + r.error + ")") << "\n";
        }
      }
      group.push_back(std::move(row));
    }
    if (group.empty()) continue;
    const auto summary = summarize(group, opt.cfg.rng_seed);
    rows.insert(rows.end(), group.begin(), group.end());
    rows.insert(rows.end(), summary.begin(), summary.end());
  }
  return rows;
}

std::string format_time(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", t);
  return buf;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opt, std::ostream* log) {
  if (opt.reps < 1) throw std::invalid_argument("reps must be at least 1");
  opt.cfg.validate();
  std::optional<Graph> base;
  if (opt.base_graph) base = load_dimacs(*opt.base_graph);

  const std::size_t count = opt.instances.size();
  std::vector<std::vector<BenchRow>> per_instance(count);
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        per_instance[i] = bench_instance(opt, opt.instances[i], base ? &*base : nullptr, log,
                                         log_mutex);
      } catch (const std::exception& e) {
        // Generation failures become one error row per algorithm.
        for (Algorithm alg : opt.algorithms) {
          per_instance[i].push_back({opt.instances[i].str(), 0, 0,
                                     std::string(algorithm_name(alg)), opt.cfg.rng_seed, "0",
                                     0, "error", ""});
        }
        if (log) {
          std::lock_guard lock(log_mutex);
          *log << "bench " << opt.instances[i].str() << ": " << e.what() << "\n";
        }
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(opt.jobs, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<BenchRow> rows;
  for (auto& part : per_instance) rows.insert(rows.end(), part.begin(), part.end());
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kCsvHeader << "\n";
  for (const auto& r : rows) {
    out << r.instance << ',' << r.n << ',' << r.m << ',' << r.algorithm << ',' << r.seed << ','
        << r.rep << ',' << format_time(r.wall_time_s) << ',' << r.outcome << ',' << r.valid
        << "\n";
  }
}

std::vector<BenchRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("CSV header must be '" + std::string(kCsvHeader) + "'");
  }
  std::vector<BenchRow> rows;
  for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 9) {
      throw std::runtime_error("CSV line " + std::to_string(lineno) + ": expected 9 fields");
    }
    try {
      rows.push_back({f[0], std::stoull(f[1]), std::stoull(f[2]), f[3], std::stoull(f[4]), f[5],
                      std::stod(f[6]), f[7], f[8]});
    } catch (const std::logic_error&) {
      throw std::runtime_error("CSV line " + std::to_string(lineno) + ": bad number");
    }
  }
  return rows;
}

std::vector<std::string> write_dat_files(const std::string& dir,
                                         const std::vector<BenchRow>& rows) {
  struct Point {
    std::uint64_t m;
    double mean = 0, sem = 0;
  };
  std::map<std::string, std::vector<Point>> series;
  for (const auto& r : rows) {
    if (r.rep != "mean" && r.rep != "sem") continue;
    const std::string family = r.instance.substr(0, r.instance.find(':'));
    auto& pts = series[family + "_" + r.algorithm];
    if (r.rep == "mean") {
      pts.push_back({r.m, r.wall_time_s, 0});
    } else if (!pts.empty()) {
      pts.back().sem = r.wall_time_s;
    }
  }
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  for (auto& [name, pts] : series) {
    std::stable_sort(pts.begin(), pts.end(),
                     [](const Point& a, const Point& b) { return a.m < b.m; });
    const std::string path = (std::filesystem::path(dir) / (name + ".dat")).string();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "# m mean_s sem_s\n";
    for (const auto& p : pts) {
      out << p.m << ' ' << format_time(p.mean) << ' ' << format_time(p.sem) << "\n";
    }
    paths.push_back(path);
  }
  return paths;
}

}  // namespace nwsssp::tools
