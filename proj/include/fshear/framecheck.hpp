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

// Numerical checks of the frame: tiling, reconstruction, energy, timing.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fshear/array.hpp"
#include "fshear/spectra.hpp"

namespace fshear {

/// Default thresholds used by `fshear check`.
inline constexpr double kTilingTolerance = 1e-13;
inline constexpr double kRoundtripTolerance = 1e-12;
inline constexpr double kParsevalTolerance = 1e-12;

struct FrameReport {
  int n = 0;
  int j0 = 0;
  ShearletVariant variant = ShearletVariant::MeyerClassic;
  double max_tiling_deviation = 0.0;
  double roundtrip_max_error = 0.0;
  double parseval_rel_error = 0.0;
  double cold_seconds = 0.0;  ///< spectra build + forward
  double forward_seconds = 0.0;  ///< forward with spectra already built
  double inverse_seconds = 0.0;

  bool operator==(const FrameReport&) const = default;
};

/// Seeded uniform [0, 1) image. Pixels are drawn row-major from mt19937_64(seed),
/// each as (x >> 11) * 2^-53, so the output is identical on every platform.
Image random_image(int n, std::uint64_t seed);

/// max over the grid of |sum_i plane_i^2 - 1|.
double check_tiling(const SpectraCube& spectra);

/// True if check_tiling(spectra) <= tol. This is the admission test for custom generators.
bool is_parseval(const SpectraCube& spectra, double tol = kTilingTolerance);

/// max over `trials` random images of max|f - inverse(forward(f))|.
/// Random images are drawn as random_image(n, seed + t) for t = 0..trials-1.
double check_roundtrip(int n, int trials, ShearletVariant variant, std::uint64_t seed,
                       std::optional<int> j0 = std::nullopt);

/// Same inputs as check_roundtrip; max of | ||f||^2 - sum ||c_i||^2 | / ||f||^2.
double check_parseval(int n, int trials, ShearletVariant variant, std::uint64_t seed,
                      std::optional<int> j0 = std::nullopt);

/// All three checks plus one timed forward/inverse pass.
FrameReport check_frame(int n, ShearletVariant variant, std::optional<int> j0 = std::nullopt, int trials = 5,
                        std::uint64_t seed = 0);

struct BenchOptions {
  int repeats = 5;
  ShearletVariant variant = ShearletVariant::MeyerClassic;
  bool parallel = false;
  std::uint64_t seed = 0;
};

/// Per size: mean cold time (spectra built from scratch, then forward), mean
/// warm forward time and mean inverse time over `repeats` runs. The accuracy
/// fields are filled from the benchmark image.
std::vector<FrameReport> bench(const std::vector<int>& sizes, const BenchOptions& options = {});

/// Tab-separated, full precision. report_tsv_header() names the columns.
std::string report_tsv_header();
std::string to_tsv(const FrameReport& report);
FrameReport parse_tsv(std::string_view line);

}  // namespace fshear
