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

#include "fshear/windows.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fshear/errors.hpp"

namespace fshear {

std::string_view to_string(ShearletVariant v) noexcept {
  return v == ShearletVariant::MeyerSmooth ? "smooth" : "classic";
}

ShearletVariant parse_variant(std::string_view name) {
  if (name == "classic") return ShearletVariant::MeyerClassic;
  if (name == "smooth") return ShearletVariant::MeyerSmooth;
  throw ParameterError("unknown shearlet variant '" + std::string(name) + "' (expected classic|smooth)");
}

namespace {

// x^4 (35 + x(-84 + x(70 - 20x)))
double aux_poly(double x) noexcept {
  const double x2 = x * x;
  return x2 * x2 * (35.0 + x * (-84.0 + x * (70.0 - 20.0 * x)));
}

}  // namespace

double meyer_aux(double x) noexcept {
  if (!(x > 0.0)) return 0.0;
  if (x >= 1.0) return 1.0;
  // upper half through v(x) = 1 - v(1 - x); 1 - x is exact there
  const double p = x <= 0.5 ? aux_poly(x) : 1.0 - aux_poly(1.0 - x);
  return std::clamp(p, 0.0, 1.0);
}

double meyer_bump(double w) noexcept {
  constexpr double half_pi = std::numbers::pi / 2.0;
  const double a = std::abs(w);
  if (a >= 1.0 && a <= 2.0) return std::sin(half_pi * meyer_aux(a - 1.0));
  // cos(pi/2 v(t)) written as sin(pi/2 v(1 - t))
  if (a > 2.0 && a <= 4.0) return std::sin(half_pi * meyer_aux(2.0 - 0.5 * a));
  return 0.0;
}

double psi1_hat(double w) noexcept {
  const double lo = meyer_bump(2.0 * w);
  const double hi = meyer_bump(w);
  return std::sqrt(lo * lo + hi * hi);
}

double psi2_hat(double w) noexcept {
  return std::sqrt(meyer_aux(1.0 - std::abs(w)));
}

double scaling_1d(double w) noexcept {
  const double a = std::abs(w);
  if (a <= 0.5) return 1.0;
  if (a >= 1.0) return 0.0;
  return std::sin(std::numbers::pi / 2.0 * meyer_aux(2.0 - 2.0 * a));
}

}  // namespace fshear
