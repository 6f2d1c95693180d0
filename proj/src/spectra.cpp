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

#include "fshear/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>

#include "fshear/errors.hpp"

namespace fshear {

std::string_view to_string(BandKind kind) noexcept {
  switch (kind) {
    case BandKind::Scaling: return "scaling";
    case BandKind::Horizontal: return "horizontal";
    case BandKind::Vertical: return "vertical";
    case BandKind::Diagonal: return "diagonal";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Indexing

BandIndex index_to_params(int flat, int j0) {
  const int eta = band_count(j0);
  if (flat < 1 || flat > eta)
    throw IndexError("band index " + std::to_string(flat) + " outside 1.." + std::to_string(eta));
  if (flat == 1) return {};

  int pos = flat - 2;
  int j = 0;
  while (pos >= (4 << j)) {
    pos -= 4 << j;
    ++j;
  }
  const int full = 1 << j;  // shear of the diagonal bands
  BandIndex b{flat, BandKind::Horizontal, j, 0};
  if (pos == 0) {
    b.shear = 0;
  } else if (pos < full) {
    b.shear = -pos;
  } else if (pos == full) {
    b.kind = BandKind::Diagonal;
    b.shear = -full;
  } else if (pos < 3 * full) {
    b.kind = BandKind::Vertical;
    b.shear = pos - 2 * full;
  } else if (pos == 3 * full) {
    b.kind = BandKind::Diagonal;
    b.shear = full;
  } else {
    b.shear = 4 * full - pos;
  }
  return b;
}

int params_to_index(BandKind kind, int scale, int shear, int j0) {
  band_count(j0);  // validates j0
  if (kind == BandKind::Scaling) return 1;
  if (scale < 0 || scale >= j0)
    throw ParameterError("scale " + std::to_string(scale) + " outside 0.." + std::to_string(j0 - 1));
  const int full = 1 << scale;
  const int ak = std::abs(shear);
  int pos = 0;
  switch (kind) {
    case BandKind::Diagonal:
      if (ak != full) throw ParameterError("diagonal band requires |shear| = 2^scale");
      pos = shear < 0 ? full : 3 * full;
      break;
    case BandKind::Horizontal:
      if (ak >= full) throw ParameterError("horizontal band requires |shear| < 2^scale");
      pos = shear == 0 ? 0 : (shear < 0 ? -shear : 4 * full - shear);
      break;
    case BandKind::Vertical:
      if (ak >= full) throw ParameterError("vertical band requires |shear| < 2^scale");
      pos = shear + 2 * full;
      break;
    case BandKind::Scaling: break;
  }
  // scales below j contribute 4 * (2^j - 1) bands
  return 2 + 4 * (full - 1) + pos;
}

int params_to_index(const BandIndex& b, int j0) {
  return params_to_index(b.kind, b.scale, b.shear, j0);
}

// ---------------------------------------------------------------------------
// Cones and pointwise spectra

bool in_cone(Cone which, double w1, double w2) noexcept {
  const double a1 = std::abs(w1);
  const double a2 = std::abs(w2);
  switch (which) {
    case Cone::Horizontal: return a1 >= 0.5 && a2 < a1;
    case Cone::Vertical: return a2 >= 0.5 && a2 > a1;
    case Cone::Seam: return a1 >= 0.5 && a1 == a2;
  }
  return false;
}

double smooth_radial(double w1, double w2) noexcept {
  const double outer = scaling_1d(0.25 * w1) * scaling_1d(0.25 * w2);
  const double inner = scaling_1d(w1) * scaling_1d(w2);
  return std::sqrt(std::max(0.0, outer * outer - inner * inner));
}

namespace {

// Radial factor at scale j for a point whose dominant coordinate is `major`.
double radial(double major, double minor, int j, ShearletVariant variant) noexcept {
  const double s = std::ldexp(1.0, -2 * j);
  if (variant == ShearletVariant::MeyerSmooth) return smooth_radial(s * major, s * minor);
  return psi1_hat(s * major);
}

// Cone shearlet psi(4^-j major, ...) * psi2(k + 2^j minor / major). The
// angular factor is only evaluated where the radial one is nonzero, which
// also keeps major != 0.
double cone_value(double major, double minor, int j, int k, ShearletVariant variant) noexcept {
  const double r = radial(major, minor, j, variant);
  if (r == 0.0) return 0.0;
  return r * psi2_hat(static_cast<double>(k) + std::ldexp(minor / major, j));
}

template <typename F>
RealPlane sample(const FrequencyGrid& grid, F&& f) {
  const int n = grid.n_image;
  RealPlane plane(n);
  for (int r = 0; r < n; ++r) {
    const double w2 = grid.axis[static_cast<std::size_t>(r)];
    for (int c = 0; c < n; ++c) plane(r, c) = f(grid.axis[static_cast<std::size_t>(c)], w2);
  }
  return plane;
}

}  // namespace

double shearlet_value(double w1, double w2, const BandIndex& b, ShearletVariant variant) noexcept {
  const int j = b.scale;
  const int k = b.shear;
  switch (b.kind) {
    case BandKind::Horizontal:
      return in_cone(Cone::Horizontal, w1, w2) ? cone_value(w1, w2, j, k, variant) : 0.0;
    case BandKind::Vertical:
      return in_cone(Cone::Vertical, w1, w2) ? cone_value(w2, w1, j, k, variant) : 0.0;
    case BandKind::Diagonal:
      // horizontal part + vertical part + seam, where both formulas coincide
      if (in_cone(Cone::Horizontal, w1, w2) || in_cone(Cone::Seam, w1, w2))
        return cone_value(w1, w2, j, k, variant);
      if (in_cone(Cone::Vertical, w1, w2)) return cone_value(w2, w1, j, k, variant);
      return 0.0;
    case BandKind::Scaling: return scaling_value(w1, w2, variant);
  }
  return 0.0;
}

double scaling_value(double w1, double w2, ShearletVariant variant) noexcept {
  if (variant == ShearletVariant::MeyerSmooth) return scaling_1d(w1) * scaling_1d(w2);
  return scaling_1d(std::max(std::abs(w1), std::abs(w2)));
}

Mask cone_indicator(const FrequencyGrid& grid, Cone which) {
  const int n = grid.n_image;
  Mask mask(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      mask(r, c) = in_cone(which, grid.axis[static_cast<std::size_t>(c)], grid.axis[static_cast<std::size_t>(r)]);
  return mask;
}

RealPlane shearlet_spectrum(const FrequencyGrid& grid, const BandIndex& b, ShearletVariant variant) {
  if (b.kind == BandKind::Scaling) throw ParameterError("shearlet_spectrum called with the scaling band");
  return sample(grid, [&](double w1, double w2) { return shearlet_value(w1, w2, b, variant); });
}

RealPlane scaling_spectrum(const FrequencyGrid& grid, ShearletVariant variant) {
  return sample(grid, [&](double w1, double w2) { return scaling_value(w1, w2, variant); });
}

// ---------------------------------------------------------------------------
// Cube assembly

SpectraCube build_spectra(int n, std::optional<int> j0, ShearletVariant variant) {
  SpectraCube cube = build_spectra(
      n, j0,
      [variant](const FrequencyGrid& g, const BandIndex& b) {
        return b.kind == BandKind::Scaling ? scaling_spectrum(g, variant) : shearlet_spectrum(g, b, variant);
      },
      variant);
  cube.custom = false;
  return cube;
}

SpectraCube build_spectra(int n, std::optional<int> j0, const SpectrumGenerator& generator, ShearletVariant tag) {
  SpectraCube cube;
  cube.grid = build_grid(n, j0);
  cube.variant = tag;
  cube.custom = true;
  const int eta = band_count(cube.grid.j0);
  cube.planes.reserve(static_cast<std::size_t>(eta));
  for (int i = 1; i <= eta; ++i) {
    RealPlane plane = generator(cube.grid, index_to_params(i, cube.grid.j0));
    if (plane.size() != n)
      throw DimensionError("spectrum generator returned a " + std::to_string(plane.size()) + "x" +
                           std::to_string(plane.size()) + " plane for size " + std::to_string(n));
    cube.planes.push_back(std::move(plane));
  }
  return cube;
}

// ---------------------------------------------------------------------------
// Cache

std::shared_ptr<const SpectraCube> SpectraCache::get(int n, std::optional<int> j0, ShearletVariant variant) {
  const SpectraKey key{n, j0.value_or(scales_for_size(n)), variant};
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  auto cube = std::make_shared<const SpectraCube>(build_spectra(n, key.j0, variant));
  std::unique_lock lock(mutex_);
  return entries_.try_emplace(key, std::move(cube)).first->second;
}

void SpectraCache::insert(std::shared_ptr<const SpectraCube> cube) {
  if (!cube) return;
  std::unique_lock lock(mutex_);
  entries_.insert_or_assign(cube->key(), std::move(cube));
}

bool SpectraCache::contains(const SpectraKey& key) const {
  std::shared_lock lock(mutex_);
  return entries_.contains(key);
}

void SpectraCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

std::size_t SpectraCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

SpectraCache& SpectraCache::global() {
  static SpectraCache cache;
  return cache;
}

}  // namespace fshear
