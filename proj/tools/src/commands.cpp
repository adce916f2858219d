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

#include "nwsssp_tools/commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "nwsssp/baselines.hpp"
#include "nwsssp/dimacs.hpp"
#include "nwsssp/instance.hpp"
#include "nwsssp/karp.hpp"
#include "nwsssp/verify.hpp"
#include "nwsssp_tools/bench.hpp"
#include "nwsssp_tools/fit.hpp"
#include "nwsssp_tools/io.hpp"

namespace nwsssp::tools {

SolverConfig SolverFlags::to_config() const {
  SolverConfig cfg;
  cfg.rng_seed = seed;
  cfg.k_factor = parse_k_factor(k_factor);
  cfg.use_diameter_bound = !no_diam_bound;
  cfg.base_case_threshold = base_case;
  if (inner == "lazy") {
    cfg.inner_solver = InnerSolver::lazy_dijkstra;
  } else if (inner == "gor") {
    cfg.inner_solver = InnerSolver::goldberg_radzik;
  } else {
    throw std::invalid_argument("inner solver must be 'lazy' or 'gor', got '" + inner + "'");
  }
  cfg.validate();
  return cfg;
}

namespace {

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

// Writes to the file, or to `fallback` when path is empty.
template <typename Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  fn(f);
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace

int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const InstanceSpec spec = InstanceSpec::parse(args.spec);
    std::optional<Graph> base;
    if (!args.base_graph.empty()) base = load_dimacs(args.base_graph);
    const Graph g = make_instance(spec, base ? &*base : nullptr);
    save_dimacs(g, args.out_path);
    out << spec.str() << " n=" << g.num_vertices() << " m=" << g.num_edges() << "\n";
    return 0;
  });
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SolverConfig cfg = args.flags.to_config();
    const Algorithm alg = parse_algorithm(args.algorithm);
    Graph g = load_dimacs(args.graph);
    if (args.source >= g.num_vertices() && !args.super_source) {
      throw std::out_of_range("source " + std::to_string(args.source) + " out of range");
    }
    Vertex source = args.source;
    if (args.super_source) {
      g = with_super_source(g);
      source = 0;
    }
    RunResult r = run_algorithm(g, source, alg, cfg, args.timeout_s);
    switch (r.outcome) {
      case Outcome::timeout:
        err << "error: time limit exceeded\n";
        return kExitError;
      case Outcome::error:
        err << "error: " << r.error << "\n";
        return kExitError;
      case Outcome::negative_cycle:
        out << "NEGATIVE CYCLE\n";
        return kExitNegativeCycle;
      case Outcome::distances:
        break;
    }
    std::span<const Weight> d = r.result.distances;
    std::span<const Weight> phi;
    if (r.result.potential) phi = r.result.potential->values();
    if (args.super_source) {
      d = d.subspan(1);
      if (!phi.empty()) phi = phi.subspan(1);
    }
    with_output(args.out_path, out, [&](std::ostream& o) { write_values(o, d); });
    if (!args.potential_out.empty()) {
      if (phi.empty()) throw std::invalid_argument("--potential-out needs --algorithm our");
      with_output(args.potential_out, out, [&](std::ostream& o) { write_values(o, phi); });
    }
    return kExitDistances;
  });
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    BenchOptions opt;
    for (const auto& s : args.specs) opt.instances.push_back(InstanceSpec::parse(s));
    if (!args.spec_file.empty()) {
      std::ifstream in(args.spec_file);
      if (!in) throw std::runtime_error("cannot open '" + args.spec_file + "'");
      std::string line;
      while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string word;
        while (words >> word) opt.instances.push_back(InstanceSpec::parse(word));
      }
    }
    if (opt.instances.empty()) throw std::invalid_argument("no instances given");
    opt.algorithms.clear();
    for (const auto& a : args.algorithms) opt.algorithms.push_back(parse_algorithm(a));
    if (opt.algorithms.empty()) throw std::invalid_argument("no algorithms given");
    if (args.reps < 1) throw std::invalid_argument("--reps must be at least 1");
    opt.reps = args.reps;
    opt.timeout_s = args.timeout_s;
    opt.jobs = args.jobs;
    opt.super_source = args.super_source;
    opt.source = args.source;
    opt.validate = !args.no_validate;
    opt.cfg = args.flags.to_config();
    if (!args.base_graph.empty()) opt.base_graph = args.base_graph;

    const auto rows = run_bench(opt, args.quiet ? nullptr : &err);
    with_output(args.csv, out, [&](std::ostream& o) { write_csv(o, rows); });
    if (!args.dat_dir.empty()) {
      for (const auto& p : write_dat_files(args.dat_dir, rows)) {
        if (!args.quiet) err << "wrote " << p << "\n";
      }
    }
    return 0;
  });
}

int cmd_fit(const FitArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::ifstream in(args.csv);
    if (!in) throw std::runtime_error("cannot open '" + args.csv + "'");
    const auto rows = read_csv(in);
    std::vector<double> m, t;
    for (const auto& r : rows) {
      if (r.rep == "mean" || r.rep == "sem" || r.outcome != "distances") continue;
      if (!args.algorithm.empty() && r.algorithm != args.algorithm) continue;
      if (!args.family.empty() && r.instance.substr(0, r.instance.find(':')) != args.family) {
        continue;
      }
      m.push_back(static_cast<double>(r.m));
      t.push_back(r.wall_time_s);
    }
    const FitResult f = fit_power_law(m, t);
    char buf[160];
    std::snprintf(buf, sizeof buf, "a=%.6g b=%.4f b_ci95=%.4f points=%zu\n", f.a, f.b,
                  f.b_ci95, f.points);
    out << buf;
    return 0;
  });
}

int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_dimacs(args.graph);
    bool all_ok = true;
    bool any = false;
    auto report = [&](const std::string& name, bool ok, const std::string& msg) {
      any = true;
      all_ok = all_ok && ok;
      out << (ok ? "PASS " : "FAIL ") << name << (ok || msg.empty() ? "" : ": " + msg) << "\n";
    };

    if (!args.potential.empty()) {
      const Potential phi(read_values_file(args.potential, g.num_vertices()));
      const CheckReport c = check_potential(g, phi);
      report("potential", c.ok, c.message);
    }
    if (!args.distances.empty()) {
      const auto d = read_values_file(args.distances, g.num_vertices());
      const CheckReport c = check_distance_certificate(g, args.source, d);
      report("certificate", c.ok, c.message);
      if (!args.no_oracle) {
        const SsspResult ref = bellman_ford(g, args.source);
        if (ref.negative_cycle) {
          report("oracle", false, "graph has a negative cycle reachable from the source");
        } else if (const auto mm = first_mismatch(ref.distances, d)) {
          auto txt = [](Weight w) { return w == kInfinity ? std::string("inf") : std::to_string(w); };
          report("oracle", false,
                 "vertex " + std::to_string(mm->vertex) + " expected " + txt(mm->expected) +
                     " got " + txt(mm->actual));
        } else {
          report("oracle", true, "");
        }
      }
    }
    if (args.restricted) {
      const RestrictedReport r = is_restricted(g);
      report("restricted", r.restricted, r.reason);
    }
    if (!any) throw std::invalid_argument("nothing to validate (give --distances, --potential or --restricted)");
    return all_ok ? 0 : 1;
  });
}

}  // namespace nwsssp::tools
