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

// Instance descriptors, `family:param[:extra]:seed`, e.g. `aug_dfs:5000:5:1`
// or `bad_gor:20000:1`.
//
//   bad_{bfct,gor,rd1,rd2,dfs}  param k
//   aug_{bfct,gor,rd1,rd2,dfs}  param k, extra augmentation factor (5)
//   shift_gor                   param k of the AUG-GOR source, extra factor (5)
//   random_restricted           param n
//   usa_shift                   param grid side, extra W (1)

#ifndef NWSSSP_INSTANCE_HPP_
#define NWSSSP_INSTANCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "nwsssp/graph.hpp"

namespace nwsssp {

struct InstanceSpec {
  std::string family;
  std::uint64_t param = 1;
  std::optional<std::uint64_t> extra;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument on malformed text or an unknown family.
  static InstanceSpec parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

// For usa_shift, `base` replaces the synthetic grid (param is then ignored).
Graph make_instance(const InstanceSpec& spec, const Graph* base = nullptr);

}  // namespace nwsssp

#endif  // NWSSSP_INSTANCE_HPP_
