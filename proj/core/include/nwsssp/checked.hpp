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

#ifndef NWSSSP_CHECKED_HPP_
#define NWSSSP_CHECKED_HPP_

#include <cstdint>

namespace nwsssp {

// Wide intermediate for exact comparisons.
__extension__ typedef __int128 Int128;

// Throws std::overflow_error. Out of line so the hot paths stay small.
[[noreturn]] void throw_weight_overflow();

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) [[unlikely]] throw_weight_overflow();
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) [[unlikely]] throw_weight_overflow();
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) [[unlikely]] throw_weight_overflow();
  return r;
}

// w + phi_u - phi_v.
inline std::int64_t checked_reduce(std::int64_t w, std::int64_t phi_u,
                                   std::int64_t phi_v) {
  return checked_sub(checked_add(w, phi_u), phi_v);
}

}  // namespace nwsssp

#endif  // NWSSSP_CHECKED_HPP_
