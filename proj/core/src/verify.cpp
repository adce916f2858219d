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

#include "nwsssp/verify.hpp"

#include <algorithm>
#include <vector>

#include "nwsssp/checked.hpp"

namespace nwsssp {
namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.tail) + ", " + std::to_string(e.head) + ", " +
         std::to_string(e.weight) + ")";
}

CheckReport fail(std::string msg) { return {false, std::move(msg)}; }

}  // namespace

CheckReport check_distance_certificate(const Graph& g, Vertex source,
                                       std::span<const Weight> d) {
  const std::size_t n = g.num_vertices();
  if (d.size() != n) return fail("distance array has the wrong length");
  if (source >= n) return fail("source out of range");
  if (d[source] != 0) return fail("distance of the source is not 0");

  for (const Edge& e : g.edges()) {
    if (d[e.tail] == kInfinity) continue;
    if (d[e.head] == kInfinity) {
      return fail("edge " + edge_text(e) + " reaches vertex " + std::to_string(e.head) +
                  " marked unreachable");
    }
    // 128 bits so d(u) + w cannot overflow.
    if (static_cast<Int128>(d[e.tail]) + e.weight < d[e.head]) {
      return fail("edge " + edge_text(e) + " violates the triangle inequality");
    }
  }

  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Vertex> queue{source};
  seen[source] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Vertex u = queue[i];
    for (const Arc& a : g.out_arcs(u)) {
      if (seen[a.to]) continue;
      if (static_cast<Int128>(d[u]) + a.weight != d[a.to]) continue;
      seen[a.to] = 1;
      queue.push_back(a.to);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (d[v] != kInfinity && !seen[v]) {
      return fail("vertex " + std::to_string(v) + " has no tight path from the source");
    }
  }
  return {};
}

CheckReport check_potential(const Graph& g, const Potential& phi) {
  if (phi.size() != g.num_vertices()) return fail("potential has the wrong length");
  for (const Edge& e : g.edges()) {
    if (static_cast<Int128>(e.weight) + phi[e.tail] - phi[e.head] < 0) {
      return fail("edge " + edge_text(e) + " has negative reduced weight");
    }
  }
  return {};
}

std::optional<Mismatch> first_mismatch(std::span<const Weight> expected,
                                       std::span<const Weight> actual) {
  const std::size_t n = std::max(expected.size(), actual.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Weight e = i < expected.size() ? expected[i] : kInfinity;
    const Weight a = i < actual.size() ? actual[i] : kInfinity;
    if (e != a || i >= expected.size() || i >= actual.size()) {
      return Mismatch{static_cast<Vertex>(i), e, a};
    }
  }
  return std::nullopt;
}

}  // namespace nwsssp
