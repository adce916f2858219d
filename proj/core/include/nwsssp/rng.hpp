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

#ifndef NWSSSP_RNG_HPP_
#define NWSSSP_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace nwsssp {

std::uint64_t splitmix64(std::uint64_t x);

// Seeded 64-bit generator with reproducible derived draws. The engine is
// std::mt19937_64 (output fully specified by the standard); bounded and real
// draws are computed here rather than through std distributions, whose
// output is implementation defined.
//
// split(stream) derives an independent child from the *seed*, not the
// current state, so adding draws to one stage never shifts another stage.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return engine_(); }

  std::uint64_t seed() const { return seed_; }
  Rng split(std::uint64_t stream) const;

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  // Uniform in [0, 1) with 53 random bits.
  double uniform_unit();

  // Number of Bernoulli(p) trials up to and including the first success
  // (support 1, 2, ...; mean 1/p), by inverse transform, capped at `cap`.
  // p is clamped to (0, 1].
  std::uint64_t geometric(double p, std::uint64_t cap);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Fisher-Yates.
template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = rng.uniform(i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace nwsssp

#endif  // NWSSSP_RNG_HPP_
