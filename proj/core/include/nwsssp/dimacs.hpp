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

// Reader and writer for the DIMACS shortest-path format:
//
//   c <comment>
//   p sp <n> <m>
//   a <u> <v> <w>      (1-based u, v; signed integer w)
//
// Vertex ids are shifted to 0-based on load and back on save.

#ifndef NWSSSP_DIMACS_HPP_
#define NWSSSP_DIMACS_HPP_

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nwsssp/graph.hpp"

namespace nwsssp {

class DimacsError : public std::runtime_error {
 public:
  // line == 0 means the error is not tied to one line (I/O, count mismatch).
  DimacsError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Graph parse_dimacs(std::string_view text);
Graph load_dimacs(const std::filesystem::path& path);

std::string to_dimacs(const Graph& g);
void save_dimacs(const Graph& g, const std::filesystem::path& path);

}  // namespace nwsssp

#endif  // NWSSSP_DIMACS_HPP_
