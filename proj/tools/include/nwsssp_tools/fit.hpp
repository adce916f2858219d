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

#ifndef NWSSSP_TOOLS_FIT_HPP_
#define NWSSSP_TOOLS_FIT_HPP_

#include <cstddef>
#include <span>

namespace nwsssp::tools {

// t = a * m^b fitted by least squares on (ln m, ln t).
struct FitResult {
  double a = 0;
  double b = 0;
  double b_ci95 = 0;  // half-width of the 95% interval on b
  std::size_t points = 0;
};

// Needs at least 3 points, positive values, and two distinct m. Throws
// std::invalid_argument otherwise.
FitResult fit_power_law(std::span<const double> m, std::span<const double> t);

}  // namespace nwsssp::tools

#endif  // NWSSSP_TOOLS_FIT_HPP_
