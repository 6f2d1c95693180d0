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

#pragma once

#include <string_view>

#include "fshear/array.hpp"

namespace fshear {

enum class ShapeKind : unsigned char { Ball, Square, Rhombus, CompositePicture };

ShapeKind parse_shape(std::string_view name);

/// Geometry in unit coordinates: x runs along columns, y along rows, both in [0, 1].
/// `size` is the diameter of a Ball, the side of a Square and the corner-to-corner
/// width of a Rhombus. CompositePicture ignores center and size.
struct Shape {
  ShapeKind kind = ShapeKind::Ball;
  double center_x = 0.5;
  double center_y = 0.5;
  double size = 0.5;
  double intensity = 1.0;
};

/// Binary image: pixel (r, c) is sampled at ((c + 1/2)/n, (r + 1/2)/n) and set to
/// `intensity` iff that point lies strictly inside the shape.
/// Throws GeometryError if the shape leaves the unit square.
Image render(const Shape& shape, int n);

}  // namespace fshear
