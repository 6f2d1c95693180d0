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

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fshear/errors.hpp"

namespace fshear {

using Complex = std::complex<double>;

/// Dense n x n array stored row-major. Element (r, c) is row r, column c.
template <typename T>
class SquareArray {
 public:
  SquareArray() = default;
  explicit SquareArray(int n, T fill = T{})
      : n_(checked(n)), data_(static_cast<std::size_t>(n) * n, fill) {}
  SquareArray(int n, std::vector<T> values) : n_(checked(n)), data_(std::move(values)) {
    if (data_.size() != static_cast<std::size_t>(n) * n)
      throw DimensionError("SquareArray: value count does not equal n*n");
  }

  int size() const noexcept { return n_; }
  std::size_t count() const noexcept { return data_.size(); }

  T& operator()(int r, int c) noexcept { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const noexcept { return data_[index(r, c)]; }

  T* data() noexcept { return data_.data(); }
  const T* data() const noexcept { return data_.data(); }
  std::span<T> values() noexcept { return data_; }
  std::span<const T> values() const noexcept { return data_; }

  bool operator==(const SquareArray&) const = default;

 private:
  static int checked(int n) {
    if (n < 0) throw DimensionError("SquareArray: negative size");
    return n;
  }
  std::size_t index(int r, int c) const noexcept {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
  }

  int n_ = 0;
  std::vector<T> data_;
};

using RealPlane = SquareArray<double>;
using ComplexPlane = SquareArray<Complex>;

/// Square grayscale image. All entries are finite; values read from PGM lie in [0, 1].
class Image : public SquareArray<double> {
 public:
  Image() = default;
  explicit Image(int n, double fill = 0.0);
  Image(int n, std::vector<double> values);
  explicit Image(RealPlane plane);
};

/// Moves the zero frequency from index 0 to index floor(n/2) along both axes.
template <typename T>
SquareArray<T> fftshift(const SquareArray<T>& in) {
  const int n = in.size();
  const int h = n / 2;
  SquareArray<T> out(n);
  for (int r = 0; r < n; ++r) {
    const int rr = (r + h) % n;
    for (int c = 0; c < n; ++c) out(rr, (c + h) % n) = in(r, c);
  }
  return out;
}

/// Inverse of fftshift; differs from it only for odd n.
template <typename T>
SquareArray<T> ifftshift(const SquareArray<T>& in) {
  const int n = in.size();
  const int h = n / 2;
  SquareArray<T> out(n);
  for (int r = 0; r < n; ++r) {
    const int rr = (r + h) % n;
    for (int c = 0; c < n; ++c) out(r, c) = in(rr, (c + h) % n);
  }
  return out;
}

}  // namespace fshear
