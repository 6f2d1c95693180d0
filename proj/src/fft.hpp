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

#include "fshear/array.hpp"

namespace fshear::detail {

/// Pair of unnormalized n x n complex DFT plans (FFTW). Planning is
/// serialized internally; execute() may run concurrently on distinct arrays.
class Fft2d {
 public:
  explicit Fft2d(int n);
  ~Fft2d();
  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;

  int size() const noexcept { return n_; }

  /// In place, sum_m x(m) exp(-2 pi i <w, m> / n).
  void forward(ComplexPlane& data) const;
  /// In place, sum_w x(w) exp(+2 pi i <w, m> / n), without the 1/n^2 factor.
  void backward(ComplexPlane& data) const;

 private:
  int n_;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

}  // namespace fshear::detail
