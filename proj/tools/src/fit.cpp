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

#include "nwsssp_tools/fit.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace nwsssp::tools {

FitResult fit_power_law(std::span<const double> m, std::span<const double> t) {
  if (m.size() != t.size()) throw std::invalid_argument("fit: length mismatch");
  const std::size_t k = m.size();
  if (k < 3) throw std::invalid_argument("fit: need at least 3 points");

  std::vector<double> x(k), y(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!(m[i] > 0) || !(t[i] > 0)) {
      throw std::invalid_argument("fit: m and t must be positive");
    }
    x[i] = std::log(m[i]);
    y[i] = std::log(t[i]);
  }
  double xbar = 0, ybar = 0;
  for (std::size_t i = 0; i < k; ++i) {
    xbar += x[i];
    ybar += y[i];
  }
  xbar /= k;
  ybar /= k;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += (x[i] - xbar) * (x[i] - xbar);
    sxy += (x[i] - xbar) * (y[i] - ybar);
  }
  if (!(sxx > 0)) throw std::invalid_argument("fit: need two distinct m values");

  FitResult r;
  r.points = k;
  r.b = sxy / sxx;
  const double intercept = ybar - r.b * xbar;
  r.a = std::exp(intercept);
  double ssr = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double e = y[i] - (intercept + r.b * x[i]);
    ssr += e * e;
  }
  const double dof = static_cast<double>(k - 2);
  const double se_b = std::sqrt(ssr / dof / sxx);
  const boost::math::students_t dist(dof);
  r.b_ci95 = se_b * boost::math::quantile(dist, 0.975);
  return r;
}

}  // namespace nwsssp::tools
