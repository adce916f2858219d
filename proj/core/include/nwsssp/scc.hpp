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

#ifndef NWSSSP_SCC_HPP_
#define NWSSSP_SCC_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nwsssp/graph.hpp"

namespace nwsssp {

// Ordered partition of (a subset of) the vertices into components, stored as
// one flat vertex array plus offsets.
class ComponentList {
 public:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  ComponentList() = default;
  ComponentList(std::size_t universe, std::vector<Vertex> order,
                std::vector<std::uint32_t> offsets);

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::span<const Vertex> operator[](std::size_t i) const {
    return {order_.data() + offsets_[i], order_.data() + offsets_[i + 1]};
  }
  // Index of the component holding v, kNone if v is in none.
  std::uint32_t component_of(Vertex v) const { return component_of_[v]; }

  std::span<const Vertex> flat() const { return order_; }
  std::span<const std::uint32_t> offsets() const { return offsets_; }
  std::size_t universe() const { return component_of_.size(); }

 private:
  std::vector<Vertex> order_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> component_of_;
};

// Strongly connected components in topological order of the condensation:
// every edge between two components goes from an earlier to a later one.
ComponentList kosaraju_scc(const Graph& g);

}  // namespace nwsssp

#endif  // NWSSSP_SCC_HPP_
