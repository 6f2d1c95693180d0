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

#include <stdexcept>
#include <string>

namespace fshear {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Image size too small for a single scale, or otherwise unusable.
class InvalidSizeError : public Error {
 public:
  using Error::Error;
};

/// Flat band index outside 1..eta.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent (kind, scale, shear) combination.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Image/spectra/coefficient sizes or keys do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Unreadable or malformed image file.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Container file with bad magic, version, header or size.
class CorruptFileError : public Error {
 public:
  using Error::Error;
};

/// Shape that does not fit inside the canvas.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure (unwritable path, missing file).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fshear
