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

// Shearlet and scaling spectra on a FrequencyGrid.
//
// Plane layout: plane(r, c) holds the spectrum at (w1, w2) = (axis[c], axis[r]),
// i.e. columns run along the horizontal frequency w1 and rows along the
// vertical frequency w2, both in centered (zero in the middle) order.
//
// Bands are addressed by a flat index 1..eta. Index 1 is the low-pass band.
// Within scale j the 2^(j+2) bands rotate counter-clockwise starting at the
// horizontal cone with shear 0:
//
//   h: k = 0, -1, ..., -(2^j - 1)
//   diagonal k = -2^j
//   v: k = -(2^j - 1), ..., 2^j - 1
//   diagonal k = +2^j
//   h: k = 2^j - 1, ..., 1

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string_view>
#include <tuple>
#include <vector>

#include "fshear/array.hpp"
#include "fshear/grid.hpp"
#include "fshear/windows.hpp"

namespace fshear {

enum class BandKind : unsigned char { Scaling, Horizontal, Vertical, Diagonal };

std::string_view to_string(BandKind kind) noexcept;

/// One band of the transform. scale and shear are meaningless for Scaling.
struct BandIndex {
  int flat = 1;
  BandKind kind = BandKind::Scaling;
  int scale = 0;
  int shear = 0;

  bool operator==(const BandIndex&) const = default;
};

BandIndex index_to_params(int flat, int j0);
int params_to_index(BandKind kind, int scale, int shear, int j0);
/// Uses kind/scale/shear of b; b.flat is ignored.
int params_to_index(const BandIndex& b, int j0);

enum class Cone : unsigned char { Horizontal, Vertical, Seam };

using Mask = SquareArray<std::uint8_t>;

/// Cone membership of a single frequency.
bool in_cone(Cone which, double w1, double w2) noexcept;

/// Membership mask of one cone over the grid, cropped to n_image.
Mask cone_indicator(const FrequencyGrid& grid, Cone which);

/// Pointwise value of a shearlet spectrum (b.kind != Scaling).
double shearlet_value(double w1, double w2, const BandIndex& b, ShearletVariant variant) noexcept;

/// Pointwise value of the low-pass spectrum.
double scaling_value(double w1, double w2, ShearletVariant variant) noexcept;

/// Smooth radial window sqrt(Phi^2(w/4) - Phi^2(w)) with Phi the tensor scaling function.
double smooth_radial(double w1, double w2) noexcept;

/// Shearlet spectrum of band b sampled on the grid, cropped to n_image. Throws ParameterError for Scaling.
RealPlane shearlet_spectrum(const FrequencyGrid& grid, const BandIndex& b, ShearletVariant variant);

RealPlane scaling_spectrum(const FrequencyGrid& grid, ShearletVariant variant);

/// Produces the n_image x n_image plane for any band, Scaling included.
using SpectrumGenerator = std::function<RealPlane(const FrequencyGrid&, const BandIndex&)>;

struct SpectraKey {
  int n = 0;
  int j0 = 0;
  ShearletVariant variant = ShearletVariant::MeyerClassic;

  auto operator<=>(const SpectraKey&) const = default;
};

/// The eta spectra of one transform configuration, in flat-index order.
struct SpectraCube {
  FrequencyGrid grid;
  ShearletVariant variant = ShearletVariant::MeyerClassic;
  bool custom = false;  ///< built from a user generator
  std::vector<RealPlane> planes;

  int size() const noexcept { return grid.n_image; }
  int j0() const noexcept { return grid.j0; }
  int eta() const noexcept { return static_cast<int>(planes.size()); }
  SpectraKey key() const noexcept { return {grid.n_image, grid.j0, variant}; }
};

SpectraCube build_spectra(int n, std::optional<int> j0 = std::nullopt,
                          ShearletVariant variant = ShearletVariant::MeyerClassic);

/// Builds the cube from a user generator. The result is tagged custom; run
/// check_tiling on it before trusting the transform to be invertible.
SpectraCube build_spectra(int n, std::optional<int> j0, const SpectrumGenerator& generator,
                          ShearletVariant tag = ShearletVariant::MeyerClassic);

/// In-memory spectra cache keyed by (n, j0, variant). Concurrent readers are
/// fine; two threads missing on the same key may both build, and the first
/// insert wins.
class SpectraCache {
 public:
  std::shared_ptr<const SpectraCube> get(int n, std::optional<int> j0, ShearletVariant variant);
  void insert(std::shared_ptr<const SpectraCube> cube);
  bool contains(const SpectraKey& key) const;
  void clear();
  std::size_t size() const;

  static SpectraCache& global();

 private:
  mutable std::shared_mutex mutex_;
  std::map<SpectraKey, std::shared_ptr<const SpectraCube>> entries_;
};

}  // namespace fshear
