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

#include <optional>
#include <vector>

namespace fshear {

/// Centered frequency lattice on which the spectra are sampled.
///
/// Spectra are always evaluated on an odd-sized grid symmetric about 0 that
/// spans [-x_max, x_max] with x_max = 2^(2 j0 - 1). Even image sizes are
/// handled by building the grid one sample larger and cropping afterwards.
struct FrequencyGrid {
  int n_image = 0;     ///< requested image size N
  int n_internal = 0;  ///< odd size the spectra are evaluated at (N or N+1)
  int j0 = 0;          ///< number of scales
  double x_max = 0.0;  ///< extent X of the lattice
  double delta = 0.0;  ///< spacing between neighbouring samples
  /// True when j0 was supplied and exceeds scales_for_size(n_image); the
  /// grid spacing is then coarser than one frequency unit.
  bool scales_exceed_natural = false;
  std::vector<double> axis;  ///< n_internal coordinates, -x_max .. x_max

  int center() const noexcept { return n_internal / 2; }
};

/// Number of scales that fit an n x n image, floor(log2(n) / 2). Throws InvalidSizeError for n < 4.
int scales_for_size(int n);

/// Number of spectra for j0 scales, 2^(j0+2) - 3.
int band_count(int j0);

FrequencyGrid build_grid(int n, std::optional<int> j0 = std::nullopt);

}  // namespace fshear
