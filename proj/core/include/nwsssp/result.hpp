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

#ifndef NWSSSP_RESULT_HPP_
#define NWSSSP_RESULT_HPP_

#include <optional>
#include <vector>

#include "nwsssp/graph.hpp"

namespace nwsssp {

// Outcome of a single-source computation: either exact distances (kInfinity
// for unreachable vertices) or a negative-cycle verdict.
struct SsspResult {
  bool negative_cycle = false;
  std::vector<Weight> distances;
  // Valid potential behind the distances, when the algorithm produces one.
  std::optional<Potential> potential;

  static SsspResult cycle() {
    SsspResult r;
    r.negative_cycle = true;
    return r;
  }
};

}  // namespace nwsssp

#endif  // NWSSSP_RESULT_HPP_
