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

// Karp's minimum cycle mean, exact. O(n m) time and O(n^2) memory per SCC;
// meant as a test oracle for graphs up to a few thousand vertices.

#ifndef NWSSSP_KARP_HPP_
#define NWSSSP_KARP_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nwsssp/checked.hpp"
#include "nwsssp/graph.hpp"

namespace nwsssp {

// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int128 l = static_cast<Int128>(a.num_) * b.den_;
    const Int128 r = static_cast<Int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

struct CycleMeanResult {
  Rational min_mean;
  // Edge ids of one cycle attaining min_mean, in cycle order.
  std::optional<std::vector<EdgeId>> witness_cycle;
};

// std::nullopt when g is acyclic.
std::optional<CycleMeanResult> karp_min_cycle_mean(const Graph& g,
                                                   bool with_witness = true);

struct RestrictedReport {
  bool restricted = false;
  bool weights_ok = false;  // every weight >= -1
  bool mean_ok = false;     // acyclic or min cycle mean >= 1
  Weight min_weight = 0;
  std::optional<Rational> min_mean;
  std::string reason;  // empty when restricted
};

RestrictedReport is_restricted(const Graph& g);

}  // namespace nwsssp

#endif  // NWSSSP_KARP_HPP_
