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

#include "fshear/transform.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <thread>

#include "fft.hpp"
#include "sum.hpp"

namespace fshear {

namespace {

int parallel_workers(int count, bool parallel) {
  if (!parallel) return 1;
  return std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, std::max(count, 1));
}

// Runs body(band, worker) for band in [0, count) on `workers` threads; worker
// is a slot id in [0, workers) for per-thread state.
void for_each_band(int count, int workers, const std::function<void(int, int)>& body) {
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) body(i, 0);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) body(i, w);
    });
}

void check_same(const SpectraKey& a, const SpectraCube& spectra, int eta) {
  if (a != spectra.key() || eta != spectra.eta())
    throw DimensionError("coefficients (n=" + std::to_string(a.n) + ", j0=" + std::to_string(a.j0) +
                         ") do not match spectra (n=" + std::to_string(spectra.size()) +
                         ", j0=" + std::to_string(spectra.j0()) + ")");
}

}  // namespace

CoefficientCube forward(const Image& image, const SpectraCube& spectra, TransformOptions options) {
  const int n = image.size();
  if (n != spectra.size())
    throw DimensionError("image is " + std::to_string(n) + "x" + std::to_string(n) + " but spectra are " +
                         std::to_string(spectra.size()) + "x" + std::to_string(spectra.size()));
  const detail::Fft2d fft(n);

  ComplexPlane spectrum(n);
  std::ranges::copy(image.values(), spectrum.values().begin());
  fft.forward(spectrum);
  const ComplexPlane centered = fftshift(spectrum);

  const double scale = 1.0 / (static_cast<double>(n) * n);
  CoefficientCube out{spectra.key(), std::vector<ComplexPlane>(spectra.planes.size())};
  for_each_band(spectra.eta(), parallel_workers(spectra.eta(), options.parallel), [&](int i, int) {
    const RealPlane& psi = spectra.planes[static_cast<std::size_t>(i)];
    ComplexPlane band(n);
    auto dst = band.values();
    auto src = centered.values();
    auto w = psi.values();
    for (std::size_t p = 0; p < dst.size(); ++p) dst[p] = src[p] * (w[p] * scale);
    band = ifftshift(band);
    fft.backward(band);
    out.planes[static_cast<std::size_t>(i)] = std::move(band);
  });
  return out;
}

Image inverse(const CoefficientCube& coeffs, const SpectraCube& spectra, TransformOptions options) {
  check_same(coeffs.key, spectra, coeffs.eta());
  const int n = spectra.size();
  for (const auto& p : coeffs.planes)
    if (p.size() != n) throw DimensionError("coefficient plane size does not match key");
  const detail::Fft2d fft(n);

  const int workers = parallel_workers(coeffs.eta(), options.parallel);
  std::vector<ComplexPlane> partial(static_cast<std::size_t>(workers), ComplexPlane(n));
  for_each_band(coeffs.eta(), workers, [&](int i, int worker) {
    ComplexPlane band = coeffs.planes[static_cast<std::size_t>(i)];
    fft.forward(band);
    band = fftshift(band);
    auto acc = partial[static_cast<std::size_t>(worker)].values();
    auto src = band.values();
    auto w = spectra.planes[static_cast<std::size_t>(i)].values();
    for (std::size_t p = 0; p < acc.size(); ++p) acc[p] += src[p] * w[p];
  });

  ComplexPlane total = std::move(partial.front());
  for (std::size_t wi = 1; wi < partial.size(); ++wi) {
    auto acc = total.values();
    auto src = partial[wi].values();
    for (std::size_t p = 0; p < acc.size(); ++p) acc[p] += src[p];
  }
  total = ifftshift(total);
  fft.backward(total);

  const double scale = 1.0 / (static_cast<double>(n) * n);
  RealPlane result(n);
  auto dst = result.values();
  auto src = total.values();
  for (std::size_t p = 0; p < dst.size(); ++p) dst[p] = src[p].real() * scale;
  return Image(std::move(result));
}

std::vector<double> band_energy(const CoefficientCube& coeffs) {
  std::vector<double> energy;
  energy.reserve(coeffs.planes.size());
  for (const auto& plane : coeffs.planes) {
    detail::CompensatedSum sum;
    for (const Complex& z : plane.values()) sum.add(std::norm(z));
    energy.push_back(sum.value());
  }
  return energy;
}

double max_imag(const CoefficientCube& coeffs) {
  double m = 0.0;
  for (const auto& plane : coeffs.planes)
    for (const Complex& z : plane.values()) m = std::max(m, std::abs(z.imag()));
  return m;
}

std::vector<RealPlane> to_real(const CoefficientCube& coeffs, double tol) {
  const double m = max_imag(coeffs);
  if (m > tol)
    throw DimensionError("coefficients are not real: max |imag| = " + std::to_string(m));
  std::vector<RealPlane> out;
  out.reserve(coeffs.planes.size());
  for (const auto& plane : coeffs.planes) {
    RealPlane r(plane.size());
    auto dst = r.values();
    auto src = plane.values();
    for (std::size_t p = 0; p < dst.size(); ++p) dst[p] = src[p].real();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace fshear
