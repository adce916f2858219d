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

#include "nwsssp/instance.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <vector>

#include "nwsssp/generators.hpp"

namespace nwsssp {
namespace {

struct FamilyEntry {
  std::string_view name;
  std::optional<BadFamily> bad;
  bool augmented;
};

constexpr std::array<FamilyEntry, 13> kFamilies{{
    {"bad_bfct", BadFamily::bfct, false},
    {"bad_gor", BadFamily::gor, false},
    {"bad_rd1", BadFamily::rd1, false},
    {"bad_rd2", BadFamily::rd2, false},
    {"bad_dfs", BadFamily::dfs, false},
    {"aug_bfct", BadFamily::bfct, true},
    {"aug_gor", BadFamily::gor, true},
    {"aug_rd1", BadFamily::rd1, true},
    {"aug_rd2", BadFamily::rd2, true},
    {"aug_dfs", BadFamily::dfs, true},
    {"shift_gor", std::nullopt, false},
    {"random_restricted", std::nullopt, false},
    {"usa_shift", std::nullopt, false},
}};

const FamilyEntry* find_family(std::string_view name) {
  for (const auto& f : kFamilies) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("instance descriptor: bad " + std::string(what) + " '" +
                                std::string(s) + "'");
  }
  return v;
}

}  // namespace

InstanceSpec InstanceSpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw std::invalid_argument("instance descriptor must be family:param[:extra]:seed, got '" +
                                std::string(text) + "'");
  }
  if (!find_family(parts[0])) {
    throw std::invalid_argument("unknown instance family '" + std::string(parts[0]) + "'");
  }
  InstanceSpec spec;
  spec.family = std::string(parts[0]);
  spec.param = parse_u64(parts[1], "size parameter");
  if (spec.param < 1) throw std::invalid_argument("instance descriptor: size parameter must be >= 1");
  if (parts.size() == 4) spec.extra = parse_u64(parts[2], "extra parameter");
  spec.seed = parse_u64(parts.back(), "seed");
  return spec;
}

std::string InstanceSpec::str() const {
  std::string s = family + ":" + std::to_string(param);
  if (extra) s += ":" + std::to_string(*extra);
  return s + ":" + std::to_string(seed);
}

Graph make_instance(const InstanceSpec& spec, const Graph* base) {
  const FamilyEntry* f = find_family(spec.family);
  if (!f) throw std::invalid_argument("unknown instance family '" + spec.family + "'");
  if (f->bad) {
    if (!f->augmented) return gen_bad(*f->bad, spec.param);
    return gen_aug(*f->bad, spec.param, spec.extra.value_or(5), spec.seed);
  }
  if (spec.family == "shift_gor") {
    const Graph aug = gen_aug(BadFamily::gor, spec.param, spec.extra.value_or(5), spec.seed);
    SolverConfig cfg;
    cfg.rng_seed = spec.seed;
    return extract_shift_gor(aug, cfg, spec.seed);
  }
  if (spec.family == "random_restricted") return gen_random_restricted(spec.param, spec.seed);
  // usa_shift
  const auto w = static_cast<Weight>(spec.extra.value_or(1));
  if (base) return usa_shift(*base, w, spec.seed);
  return usa_shift(gen_grid(spec.param, spec.seed), w, spec.seed);
}

}  // namespace nwsssp
