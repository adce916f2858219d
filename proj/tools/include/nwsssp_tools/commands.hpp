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

// Subcommands of the nwsssp tool, callable without a process boundary.
// Each returns the process exit code.

#ifndef NWSSSP_TOOLS_COMMANDS_HPP_
#define NWSSSP_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nwsssp/graph.hpp"
#include "nwsssp/solver.hpp"

namespace nwsssp::tools {

struct SolverFlags {
  std::uint64_t seed = 1;
  std::string k_factor = "40";
  bool no_diam_bound = false;
  std::uint64_t base_case = 300;
  std::string inner = "lazy";

  SolverConfig to_config() const;
};

struct GenerateArgs {
  std::string spec;
  std::string out_path;
  std::string base_graph;  // optional DIMACS file for usa_shift
};
int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err);

// Exit codes of `solve`.
inline constexpr int kExitDistances = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegativeCycle = 2;

struct SolveArgs {
  std::string graph;
  Vertex source = 0;
  std::string algorithm = "our";
  SolverFlags flags;
  double timeout_s = 1800;
  bool super_source = false;
  std::string out_path;        // stdout when empty
  std::string potential_out;   // `our` only
};
int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);

struct BenchArgs {
  std::vector<std::string> specs;
  std::string spec_file;  // one descriptor per line, '#' comments
  std::vector<std::string> algorithms{"our", "gor"};
  std::uint32_t reps = 5;
  double timeout_s = 1800;
  std::uint32_t jobs = 1;
  std::string csv;  // stdout when empty
  bool super_source = false;
  Vertex source = 0;
  std::string dat_dir;
  std::string base_graph;
  bool no_validate = false;
  bool quiet = false;
  SolverFlags flags;
};
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

struct FitArgs {
  std::string csv;
  std::string algorithm;  // all when empty
  std::string family;     // descriptor prefix before the first ':'; all when empty
};
int cmd_fit(const FitArgs& args, std::ostream& out, std::ostream& err);

struct ValidateArgs {
  std::string graph;
  Vertex source = 0;
  std::string distances;  // distance file to certify and compare
  std::string potential;  // potential file to check
  bool no_oracle = false;
  bool restricted = false;
};
int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err);

}  // namespace nwsssp::tools

#endif  // NWSSSP_TOOLS_COMMANDS_HPP_
