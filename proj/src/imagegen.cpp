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

#include "fshear/imagegen.hpp"

#include <array>
#include <cmath>
#include <string>

#include "fshear/errors.hpp"

namespace fshear {

ShapeKind parse_shape(std::string_view name) {
  if (name == "ball") return ShapeKind::Ball;
  if (name == "square") return ShapeKind::Square;
  if (name == "rhombus") return ShapeKind::Rhombus;
  if (name == "picture") return ShapeKind::CompositePicture;
  throw ParameterError("unknown shape '" + std::string(name) + "' (expected ball|square|rhombus|picture)");
}

namespace {

void check_fits(const Shape& s) {
  const double h = 0.5 * s.size;
  if (!(s.size > 0.0 && s.size <= 1.0)) throw GeometryError("shape size must lie in (0, 1]");
  if (!(s.intensity >= 0.0 && s.intensity <= 1.0)) throw GeometryError("shape intensity must lie in [0, 1]");
  if (s.center_x - h < 0.0 || s.center_x + h > 1.0 || s.center_y - h < 0.0 || s.center_y + h > 1.0)
    throw GeometryError("shape extends outside the canvas");
}

// Membership in pixel units: (dx, dy) is the offset of the pixel center from
// the shape center, radius is half the size. Offsets of a centered shape are
// exact half-integers, which keeps symmetric shapes exactly symmetric.
bool inside(ShapeKind kind, double dx, double dy, double radius) {
  switch (kind) {
    case ShapeKind::Ball: return dx * dx + dy * dy < radius * radius;
    case ShapeKind::Square: return std::abs(dx) < radius && std::abs(dy) < radius;
    case ShapeKind::Rhombus: return std::abs(dx) + std::abs(dy) < radius;
    case ShapeKind::CompositePicture: return false;
  }
  return false;
}

void draw(Image& img, const Shape& s) {
  check_fits(s);
  const int n = img.size();
  const double cx = s.center_x * n;
  const double cy = s.center_y * n;
  const double radius = 0.5 * s.size * n;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (inside(s.kind, (c + 0.5) - cx, (r + 0.5) - cy, radius)) img(r, c) = s.intensity;
}

}  // namespace

Image render(const Shape& shape, int n) {
  if (n < 4) throw InvalidSizeError("image size must be at least 4");
  Image img(n);
  if (shape.kind != ShapeKind::CompositePicture) {
    draw(img, shape);
    return img;
  }
  if (!(shape.intensity >= 0.0 && shape.intensity <= 1.0))
    throw GeometryError("shape intensity must lie in [0, 1]");
  // three forms with round, axis-parallel and diagonal edges
  const std::array<Shape, 3> parts{{
      {ShapeKind::Ball, 0.27, 0.27, 0.36, shape.intensity},
      {ShapeKind::Square, 0.73, 0.27, 0.32, shape.intensity},
      {ShapeKind::Rhombus, 0.5, 0.72, 0.44, shape.intensity},
  }};
  for (const auto& p : parts) draw(img, p);
  return img;
}

}  // namespace fshear
