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

#include "nwsssp/scc.hpp"

#include <numeric>
#include <stdexcept>

#include "scc_impl.hpp"

namespace nwsssp {

ComponentList::ComponentList(std::size_t universe, std::vector<Vertex> order,
                             std::vector<std::uint32_t> offsets)
    : order_(std::move(order)),
      offsets_(std::move(offsets)),
      component_of_(universe, kNone) {
  if (offsets_.empty() || offsets_.front() != 0 ||
      offsets_.back() != order_.size()) {
    throw std::invalid_argument("ComponentList: inconsistent offsets");
  }
  for (std::size_t i = 0; i + 1 < offsets_.size(); ++i) {
    for (std::uint32_t j = offsets_[i]; j < offsets_[i + 1]; ++j) {
      const Vertex v = order_[j];
      if (v >= universe || component_of_[v] != kNone) {
        throw std::invalid_argument("ComponentList: vertex repeated or out of range");
      }
      component_of_[v] = static_cast<std::uint32_t>(i);
    }
  }
}

ComponentList kosaraju_scc(const Graph& g) {
  std::vector<Vertex> all(g.num_vertices());
  std::iota(all.begin(), all.end(), Vertex{0});
  detail::SccWorkspace ws(g.num_vertices());
  detail::FlatComponents comps;
  detail::kosaraju(g, all, [](Vertex, const Arc&) { return true; }, ws, comps);
  return ComponentList(g.num_vertices(), std::move(comps.order),
                       std::move(comps.offsets));
}

}  // namespace nwsssp
