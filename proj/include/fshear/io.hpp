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

// Image and coefficient files.
//
// Images are 8-bit PGM (binary P5 or ASCII P2), square only.
//
// Coefficient (.ffsc) and spectra (.ffsp) containers share one layout, all
// fields little-endian:
//
//   offset size
//        0    4  magic "FFSC" or "FFSP"
//        4    2  version, u16 = 1
//        6    1  variant, u8 (0 classic, 1 smooth)
//        7    1  flags, u8 (bit 0: planes stored real-only)
//        8    4  n, u32
//       12    2  j0, u16
//       14    4  eta, u32 = 2^(j0+2) - 3
//       18       eta planes of n*n row-major elements, each either an f64
//                (real-only) or an (re, im) pair of f64
//
// Planes are in flat band order and centered frequency order, exactly as in
// memory. Spectra files are always real-only.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "fshear/array.hpp"
#include "fshear/spectra.hpp"
#include "fshear/transform.hpp"

namespace fshear {

inline constexpr std::string_view kCoefficientMagic = "FFSC";
inline constexpr std::string_view kSpectraMagic = "FFSP";
inline constexpr std::uint16_t kContainerVersion = 1;
inline constexpr std::size_t kContainerHeaderSize = 18;
inline constexpr std::uint8_t kRealOnlyFlag = 0x01;

struct ContainerHeader {
  std::string magic;
  std::uint16_t version = kContainerVersion;
  ShearletVariant variant = ShearletVariant::MeyerClassic;
  std::uint8_t flags = 0;
  std::uint32_t n = 0;
  std::uint16_t j0 = 0;
  std::uint32_t eta = 0;

  bool real_only() const noexcept { return (flags & kRealOnlyFlag) != 0; }
  std::uint64_t payload_bytes() const noexcept;
};

Image decode_pgm(std::string_view bytes);
/// P5, maxval 255; values clamped to [0, 1] and rounded half up.
std::string encode_pgm(const Image& image);

Image read_image(const std::filesystem::path& path);
void write_image(const Image& image, const std::filesystem::path& path);

/// real_only stores only real parts and requires max |imag| <= 1e-8.
/// Throws DimensionError on non-finite values.
void write_coefficients(const CoefficientCube& coeffs, const std::filesystem::path& path, bool real_only = false);
void write_coefficients(const CoefficientCube& coeffs, std::ostream& out, bool real_only = false);
CoefficientCube read_coefficients(const std::filesystem::path& path);
CoefficientCube decode_coefficients(std::string_view bytes);

void write_spectra(const SpectraCube& spectra, const std::filesystem::path& path);
SpectraCube read_spectra(const std::filesystem::path& path);
SpectraCube decode_spectra(std::string_view bytes);

/// Parses and validates the header of either container kind against the full byte size.
ContainerHeader read_header(const std::filesystem::path& path);
ContainerHeader decode_header(std::string_view bytes);

/// Spectra for (n, j0, variant): taken from the in-memory cache, else from the
/// cache file when its header matches, else built. A freshly built cube is
/// written to cache_file when one is given.
std::shared_ptr<const SpectraCube> load_spectra(int n, std::optional<int> j0, ShearletVariant variant,
                                                const std::optional<std::filesystem::path>& cache_file);

}  // namespace fshear
