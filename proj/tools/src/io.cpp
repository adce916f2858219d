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

#include "nwsssp_tools/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nwsssp::tools {
namespace {

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

void write_values(std::ostream& out, std::span<const Weight> values) {
  std::string buf;
  for (std::size_t v = 0; v < values.size(); ++v) {
    buf += std::to_string(v);
    buf += ' ';
    buf += values[v] == kInfinity ? std::string("inf") : std::to_string(values[v]);
    buf += '\n';
    if (buf.size() > (1u << 16)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

std::vector<Weight> read_values(std::istream& in, std::size_t n) {
  std::vector<Weight> values(n, 0);
  std::vector<std::uint8_t> seen(n, 0);
  std::size_t count = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    std::istringstream fields(line);
    std::string vs, ws, extra;
    if (!(fields >> vs)) continue;  // blank line
    if (!(fields >> ws) || (fields >> extra)) bad_line(lineno, "expected '<vertex> <value>'");
    std::uint64_t v = 0;
    if (!parse_number(vs, v) || v >= n) bad_line(lineno, "bad vertex id '" + vs + "'");
    if (seen[v]) bad_line(lineno, "vertex " + vs + " listed twice");
    Weight w = 0;
    if (ws == "inf") {
      w = kInfinity;
    } else if (!parse_number(ws, w)) {
      bad_line(lineno, "bad value '" + ws + "'");
    }
    seen[v] = 1;
    values[v] = w;
    ++count;
  }
  if (count != n) {
    throw std::runtime_error("expected " + std::to_string(n) + " vertices, found " +
                             std::to_string(count));
  }
  return values;
}

std::vector<Weight> read_values_file(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return read_values(in, n);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace nwsssp::tools
