// Copyright 2026 The fshear Authors
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

#include "fshear/grid.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "fshear/errors.hpp"

namespace fshear {

namespace {
constexpr int kMaxScales = 14;
}

int scales_for_size(int n) {
  if (n < 4) throw InvalidSizeError("image size " + std::to_string(n) + " is below the minimum of 4");
  // floor(log2(n)/2) == floor(floor(log2(n))/2) for integers
  const int log2n = std::bit_width(static_cast<unsigned>(n)) - 1;
  return log2n / 2;
}

int band_count(int j0) {
  if (j0 < 1 || j0 > kMaxScales) throw ParameterError("number of scales must lie in 1.." + std::to_string(kMaxScales));
  return (1 << (j0 + 2)) - 3;
}

FrequencyGrid build_grid(int n, std::optional<int> j0) {
  const int natural = scales_for_size(n);
  FrequencyGrid g;
  g.n_image = n;
  g.n_internal = (n % 2 == 0) ? n + 1 : n;
  g.j0 = j0.value_or(natural);
  if (g.j0 < 1 || g.j0 > kMaxScales)
    throw ParameterError("number of scales must lie in 1.." + std::to_string(kMaxScales));
  g.scales_exceed_natural = g.j0 > natural;
  g.x_max = std::ldexp(1.0, 2 * g.j0 - 1);
  const int half = g.n_internal / 2;
  g.delta = std::ldexp(1.0, 2 * g.j0) / static_cast<double>(g.n_internal - 1);
  g.axis.resize(static_cast<std::size_t>(g.n_internal));
  // i * x_max / half keeps the end points and 0 exact and the axis antisymmetric
  for (int i = -half; i <= half; ++i)
    g.axis[static_cast<std::size_t>(i + half)] = static_cast<double>(i) * g.x_max / static_cast<double>(half);
  return g;
}

}  // namespace fshear
