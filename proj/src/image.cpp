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

#include <cmath>

#include "fshear/array.hpp"

namespace fshear {

Image::Image(int n, double fill) : SquareArray<double>(n, fill) {
  if (!std::isfinite(fill)) throw DimensionError("image values must be finite");
}

Image::Image(int n, std::vector<double> values) : Image(RealPlane(n, std::move(values))) {}

Image::Image(RealPlane plane) : SquareArray<double>(std::move(plane)) {
  for (double v : values())
    if (!std::isfinite(v)) throw DimensionError("image values must be finite");
}

}  // namespace fshear
