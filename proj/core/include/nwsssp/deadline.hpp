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

#ifndef NWSSSP_DEADLINE_HPP_
#define NWSSSP_DEADLINE_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace nwsssp {

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("time limit exceeded") {}
};

using Clock = std::chrono::steady_clock;

// Cooperative time limit. tick() is cheap; it reads the clock once every
// kStride calls and throws TimeoutError once the deadline has passed.
class DeadlineGuard {
 public:
  static constexpr std::uint32_t kStride = 1024;

  explicit DeadlineGuard(std::optional<Clock::time_point> deadline = {})
      : deadline_(deadline) {}

  void tick() {
    if (!deadline_) return;
    if (++count_ % kStride == 0) check();
  }

  void check() const {
    if (deadline_ && Clock::now() >= *deadline_) throw TimeoutError();
  }

 private:
  std::optional<Clock::time_point> deadline_;
  std::uint32_t count_ = 0;
};

}  // namespace nwsssp

#endif  // NWSSSP_DEADLINE_HPP_
