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

// Per-vertex value files: one `<vertex> <value|inf>` line per vertex,
// 0-based vertex ids, in vertex order.

#ifndef NWSSSP_TOOLS_IO_HPP_
#define NWSSSP_TOOLS_IO_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nwsssp/graph.hpp"

namespace nwsssp::tools {

void write_values(std::ostream& out, std::span<const Weight> values);

// Throws std::runtime_error naming the line on malformed input. Vertices
// may appear in any order but each exactly once.
std::vector<Weight> read_values(std::istream& in, std::size_t n);
std::vector<Weight> read_values_file(const std::string& path, std::size_t n);

}  // namespace nwsssp::tools

#endif  // NWSSSP_TOOLS_IO_HPP_
