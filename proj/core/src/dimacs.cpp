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

#include "nwsssp/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace nwsssp {

DimacsError::DimacsError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ": " +
                                         what),
      line_(line) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits one line into whitespace separated fields without allocating.
class Fields {
 public:
  explicit Fields(std::string_view line) : rest_(line) {}

  std::optional<std::string_view> next() {
    std::size_t i = 0;
    while (i < rest_.size() && is_space(rest_[i])) ++i;
    if (i == rest_.size()) return std::nullopt;
    std::size_t j = i;
    while (j < rest_.size() && !is_space(rest_[j])) ++j;
    std::string_view field = rest_.substr(i, j - i);
    rest_.remove_prefix(j);
    return field;
  }

 private:
  std::string_view rest_;
};

template <typename T>
T parse_number(std::optional<std::string_view> field, std::size_t line,
               const char* what) {
  if (!field) throw DimacsError(line, std::string("missing ") + what);
  T value{};
  const char* first = field->data();
  const char* last = first + field->size();
  if (!field->empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw DimacsError(line, std::string("invalid ") + what + " '" +
                                std::string(*field) + "'");
  }
  return value;
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;

  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    Fields fields(line);
    const auto tag = fields.next();
    if (!tag || *tag == "c" || tag->front() == 'c') continue;
    if (*tag == "p") {
      if (n) throw DimacsError(line_no, "duplicate problem line");
      const auto kind = fields.next();
      if (!kind || *kind != "sp") {
        throw DimacsError(line_no, "expected problem type 'sp'");
      }
      n = parse_number<std::size_t>(fields.next(), line_no, "vertex count");
      declared_m =
          parse_number<std::size_t>(fields.next(), line_no, "edge count");
      if (fields.next()) throw DimacsError(line_no, "trailing fields");
      if (*n >= kNoVertex) throw DimacsError(line_no, "vertex count too large");
      edges.reserve(declared_m);
    } else if (*tag == "a") {
      if (!n) throw DimacsError(line_no, "arc line before problem line");
      const auto u = parse_number<std::uint64_t>(fields.next(), line_no, "tail");
      const auto v = parse_number<std::uint64_t>(fields.next(), line_no, "head");
      const auto w = parse_number<Weight>(fields.next(), line_no, "weight");
      if (fields.next()) throw DimacsError(line_no, "trailing fields");
      if (u < 1 || u > *n || v < 1 || v > *n) {
        throw DimacsError(line_no, "vertex id out of range 1.." +
                                       std::to_string(*n));
      }
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), w});
    } else {
      throw DimacsError(line_no, "unknown line type '" + std::string(*tag) + "'");
    }
  }
  if (!n) throw DimacsError(0, "missing problem line");
  if (edges.size() != declared_m) {
    throw DimacsError(0, "problem line declares " + std::to_string(declared_m) +
                             " arcs but file contains " +
                             std::to_string(edges.size()));
  }
  return Graph(*n, std::move(edges));
}

Graph load_dimacs(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DimacsError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw DimacsError(0, "read error on " + path.string());
  return parse_dimacs(buffer.str());
}

std::string to_dimacs(const Graph& g) {
  std::string out;
  out.reserve(32 + g.num_edges() * 24);
  char buf[24];
  auto put = [&](auto value) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    out.append(buf, ptr);
  };
  out += "p sp ";
  put(g.num_vertices());
  out += ' ';
  put(g.num_edges());
  out += '\n';
  for (const Edge& e : g.edges()) {
    out += "a ";
    put(static_cast<std::uint64_t>(e.tail) + 1);
    out += ' ';
    put(static_cast<std::uint64_t>(e.head) + 1);
    out += ' ';
    put(e.weight);
    out += '\n';
  }
  return out;
}

void save_dimacs(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const std::string text = to_dimacs(g);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write error on " + path.string());
}

}  // namespace nwsssp
