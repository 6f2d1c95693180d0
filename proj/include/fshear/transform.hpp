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

// Forward and inverse shearlet transform.
//
// forward:  c_i = ifft2( ifftshift( fftshift(fft2(f)) * psi_i ) )
// inverse:  f   = ifft2( ifftshift( sum_i fftshift(fft2(c_i)) * psi_i ) )
//
// fft2 is the unnormalized DFT and ifft2 carries the 1/N^2 factor. The spectra
// psi_i are stored in centered order, hence the shifts. Because the spectra
// tile the plane (sum_i psi_i^2 = 1), inverse is both the adjoint and the
// inverse of forward.

#pragma once

#include <vector>

#include "fshear/array.hpp"
#include "fshear/spectra.hpp"

namespace fshear {

/// Output of the forward transform, one complex plane per band in flat-index order.
struct CoefficientCube {
  SpectraKey key;
  std::vector<ComplexPlane> planes;

  int size() const noexcept { return key.n; }
  int eta() const noexcept { return static_cast<int>(planes.size()); }
};

struct TransformOptions {
  /// Spread the per-band FFTs over hardware threads. Results then differ from
  /// the serial path in the last bits of the inverse summation.
  bool parallel = false;
};

CoefficientCube forward(const Image& image, const SpectraCube& spectra, TransformOptions options = {});

Image inverse(const CoefficientCube& coeffs, const SpectraCube& spectra, TransformOptions options = {});

/// Squared Frobenius norm of each coefficient plane.
std::vector<double> band_energy(const CoefficientCube& coeffs);

/// Largest |Im| over all coefficients.
double max_imag(const CoefficientCube& coeffs);

/// Real parts of the planes. Throws DimensionError if any imaginary part exceeds tol.
std::vector<RealPlane> to_real(const CoefficientCube& coeffs, double tol = 1e-8);

}  // namespace fshear
