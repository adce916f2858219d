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

#ifndef NWSSSP_VERIFY_HPP_
#define NWSSSP_VERIFY_HPP_

#include <optional>
#include <span>
#include <string>

#include "nwsssp/graph.hpp"

namespace nwsssp {

struct CheckReport {
  bool ok = true;
  std::string message;  // first failure, empty when ok
};

// Linear-time proof that d is the exact distance array from `source`:
// d(source) = 0, no edge can improve d, and every finite vertex is reached
// from the source along tight edges.
CheckReport check_distance_certificate(const Graph& g, Vertex source,
                                       std::span<const Weight> d);

// All reduced weights nonnegative; names the first offending edge.
CheckReport check_potential(const Graph& g, const Potential& phi);

struct Mismatch {
  Vertex vertex;
  Weight expected;
  Weight actual;
};

// First index where the arrays differ (a length difference reports the
// first missing index with the missing side as kInfinity).
std::optional<Mismatch> first_mismatch(std::span<const Weight> expected,
                                       std::span<const Weight> actual);

}  // namespace nwsssp

#endif  // NWSSSP_VERIFY_HPP_
