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

// One-dimensional Meyer-type windows. Every spectrum in the library is a
// product of these functions. All of them are total, even where it makes
// sense, and return 0 outside their support.

#pragma once

#include <string_view>

namespace fshear {

/// Which family of shearlet spectra to build.
enum class ShearletVariant : unsigned char {
  MeyerClassic = 0,  ///< cone-matched scaling function, kinked diagonal shearlets
  MeyerSmooth = 1,   ///< tensor scaling function, smooth diagonal shearlets
};

std::string_view to_string(ShearletVariant v) noexcept;
/// Accepts "classic" and "smooth"; throws ParameterError otherwise.
ShearletVariant parse_variant(std::string_view name);

/// Degree-7 transition polynomial: 0 below 0, 1 above 1, 35x^4-84x^5+70x^6-20x^7 between.
/// The result is clamped to [0, 1].
double meyer_aux(double x) noexcept;

/// Bump supported on [-4,-1] u [1,4] with b(+-2) = 1.
double meyer_bump(double w) noexcept;

/// Radial shearlet window, sqrt(b(2w)^2 + b(w)^2). Support [-4,-1/2] u [1/2,4], 1 on 1 <= |w| <= 2.
double psi1_hat(double w) noexcept;

/// Angular shearlet window, sqrt(v(1 - |w|)). Support [-1, 1], psi2_hat(0) = 1.
double psi2_hat(double w) noexcept;

/// Low-pass window: 1 on |w| <= 1/2, cosine decay to 0 at |w| = 1.
double scaling_1d(double w) noexcept;

}  // namespace fshear
