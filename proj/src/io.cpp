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

#include "fshear/io.hpp"

#include <unistd.h>

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <ostream>
#include <vector>

#include "fshear/errors.hpp"

namespace fs = std::filesystem;

namespace fshear {

namespace {

// ---------------------------------------------------------------------------
// Files

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes to a sibling temporary and renames it over `path`.
template <typename Emit>
void write_atomically(const fs::path& path, Emit&& emit) {
  fs::path tmp = path;
  tmp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    emit(out);
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write failed for '" + path.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move temporary file onto '" + path.string() + "'");
  }
}

// ---------------------------------------------------------------------------
// Little-endian primitives

template <typename U>
void put_le(std::string& out, U value) {
  for (std::size_t i = 0; i < sizeof(U); ++i) out.push_back(static_cast<char>((value >> (8 * i)) & 0xFF));
}

template <typename U>
U get_le(const char* p) {
  U v = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(static_cast<unsigned char>(p[i])) << (8 * i);
  return v;
}

void put_f64(std::string& out, double x) { put_le(out, std::bit_cast<std::uint64_t>(x)); }
double get_f64(const char* p) { return std::bit_cast<double>(get_le<std::uint64_t>(p)); }

std::string encode_header(const ContainerHeader& h) {
  std::string out(h.magic);
  put_le<std::uint16_t>(out, h.version);
  put_le<std::uint8_t>(out, static_cast<std::uint8_t>(h.variant));
  put_le<std::uint8_t>(out, h.flags);
  put_le<std::uint32_t>(out, h.n);
  put_le<std::uint16_t>(out, h.j0);
  put_le<std::uint32_t>(out, h.eta);
  return out;
}

ContainerHeader decode_header(std::string_view bytes, std::string_view expected_magic) {
  if (bytes.size() < kContainerHeaderSize) throw CorruptFileError("file is shorter than the container header");
  ContainerHeader h;
  h.magic = std::string(bytes.substr(0, 4));
  if (!expected_magic.empty() ? h.magic != expected_magic
                              : (h.magic != kCoefficientMagic && h.magic != kSpectraMagic))
    throw CorruptFileError("bad magic '" + h.magic + "'");
  const char* p = bytes.data();
  h.version = get_le<std::uint16_t>(p + 4);
  if (h.version != kContainerVersion) throw CorruptFileError("unsupported version " + std::to_string(h.version));
  const auto variant = get_le<std::uint8_t>(p + 6);
  if (variant > 1) throw CorruptFileError("unknown variant code " + std::to_string(variant));
  h.variant = static_cast<ShearletVariant>(variant);
  h.flags = get_le<std::uint8_t>(p + 7);
  if ((h.flags & ~kRealOnlyFlag) != 0) throw CorruptFileError("unknown flag bits");
  if (h.magic == kSpectraMagic && !h.real_only()) throw CorruptFileError("spectra file without real-only flag");
  h.n = get_le<std::uint32_t>(p + 8);
  h.j0 = get_le<std::uint16_t>(p + 12);
  h.eta = get_le<std::uint32_t>(p + 14);
  if (h.n < 1 || h.n > (1u << 16)) throw CorruptFileError("implausible image size " + std::to_string(h.n));
  if (h.j0 < 1 || h.j0 > 14) throw CorruptFileError("implausible scale count " + std::to_string(h.j0));
  if (h.eta != static_cast<std::uint32_t>(band_count(h.j0)))
    throw CorruptFileError("eta " + std::to_string(h.eta) + " does not match j0 " + std::to_string(h.j0));
  if (bytes.size() != kContainerHeaderSize + h.payload_bytes())
    throw CorruptFileError("file size " + std::to_string(bytes.size()) + " does not match header (expected " +
                           std::to_string(kContainerHeaderSize + h.payload_bytes()) + ")");
  return h;
}

double finite_or_throw(double x) {
  if (!std::isfinite(x)) throw CorruptFileError("non-finite value in payload");
  return x;
}

template <typename Plane>
void require_finite(const Plane& plane) {
  for (const auto& v : plane.values()) {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Complex>) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DimensionError("refusing to write non-finite coefficients");
    } else if (!std::isfinite(v)) {
      throw DimensionError("refusing to write non-finite spectra");
    }
  }
}

// ---------------------------------------------------------------------------
// PGM tokens

struct PgmCursor {
  std::string_view bytes;
  std::size_t pos = 0;

  void skip_space_and_comments() {
    while (pos < bytes.size()) {
      const char ch = bytes[pos];
      if (ch == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  long next_int(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos;
    long v = 0;
    while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
      v = v * 10 + (bytes[pos] - '0');
      if (v > 1'000'000) throw FormatError(std::string("PGM ") + what + " out of range");
      ++pos;
    }
    if (pos == start) throw FormatError(std::string("PGM: expected ") + what);
    return v;
  }
};

}  // namespace

std::uint64_t ContainerHeader::payload_bytes() const noexcept {
  const std::uint64_t per = real_only() ? 8 : 16;
  return static_cast<std::uint64_t>(eta) * n * n * per;
}

// ---------------------------------------------------------------------------
// PGM

Image decode_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2'))
    throw FormatError("not a PGM file (expected P5 or P2 magic)");
  const bool binary = bytes[1] == '5';
  PgmCursor cur{bytes, 2};
  const long width = cur.next_int("width");
  const long height = cur.next_int("height");
  const long maxval = cur.next_int("maxval");
  if (width < 1 || height < 1) throw FormatError("PGM has zero width or height");
  if (width != height)
    throw FormatError("image is " + std::to_string(width) + "x" + std::to_string(height) +
                      "; only square images are supported");
  if (maxval < 1 || maxval > 255) throw FormatError("only 8-bit PGM (maxval <= 255) is supported");

  const int n = static_cast<int>(width);
  RealPlane plane(n);
  const double scale = 1.0 / static_cast<double>(maxval);
  auto out = plane.values();
  if (binary) {
    if (cur.pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[cur.pos])))
      throw FormatError("PGM header must end with a single whitespace");
    ++cur.pos;
    if (bytes.size() - cur.pos < out.size()) throw FormatError("PGM pixel data is truncated");
    for (std::size_t i = 0; i < out.size(); ++i) {
      const auto v = static_cast<unsigned char>(bytes[cur.pos + i]);
      if (v > maxval) throw FormatError("PGM pixel exceeds maxval");
      out[i] = v * scale;
    }
  } else {
    for (auto& o : out) {
      const long v = cur.next_int("pixel value");
      if (v > maxval) throw FormatError("PGM pixel exceeds maxval");
      o = static_cast<double>(v) * scale;
    }
  }
  return Image(std::move(plane));
}

std::string encode_pgm(const Image& image) {
  const int n = image.size();
  std::string out = "P5\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
  out.reserve(out.size() + image.count());
  for (double v : image.values()) {
    const double q = std::floor(std::clamp(v, 0.0, 1.0) * 255.0 + 0.5);
    out.push_back(static_cast<char>(static_cast<unsigned char>(q)));
  }
  return out;
}

Image read_image(const fs::path& path) {
  try {
    return decode_pgm(slurp(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_image(const Image& image, const fs::path& path) {
  const std::string bytes = encode_pgm(image);
  write_atomically(path, [&](std::ostream& os) { os.write(bytes.data(), static_cast<std::streamsize>(bytes.size())); });
}

// ---------------------------------------------------------------------------
// Containers

void write_coefficients(const CoefficientCube& coeffs, std::ostream& os, bool real_only) {
  if (coeffs.eta() != band_count(coeffs.key.j0))
    throw DimensionError("coefficient cube has " + std::to_string(coeffs.eta()) + " planes, expected " +
                         std::to_string(band_count(coeffs.key.j0)));
  for (const auto& p : coeffs.planes) {
    if (p.size() != coeffs.key.n) throw DimensionError("coefficient plane size does not match key");
    require_finite(p);
  }
  if (real_only && max_imag(coeffs) > 1e-8)
    throw DimensionError("real-only output requested but coefficients have imaginary parts");

  ContainerHeader h;
  h.magic = kCoefficientMagic;
  h.variant = coeffs.key.variant;
  h.flags = real_only ? kRealOnlyFlag : 0;
  h.n = static_cast<std::uint32_t>(coeffs.key.n);
  h.j0 = static_cast<std::uint16_t>(coeffs.key.j0);
  h.eta = static_cast<std::uint32_t>(coeffs.eta());

  const std::string head = encode_header(h);
  os.write(head.data(), static_cast<std::streamsize>(head.size()));
  std::string buf;
  for (const auto& plane : coeffs.planes) {
    buf.clear();
    buf.reserve(plane.count() * (real_only ? 8 : 16));
    for (const Complex& z : plane.values()) {
      put_f64(buf, z.real());
      if (!real_only) put_f64(buf, z.imag());
    }
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
}

void write_coefficients(const CoefficientCube& coeffs, const fs::path& path, bool real_only) {
  write_atomically(path, [&](std::ostream& os) { write_coefficients(coeffs, os, real_only); });
}

CoefficientCube read_coefficients(const fs::path& path) { return decode_coefficients(slurp(path)); }

CoefficientCube decode_coefficients(std::string_view bytes) {
  const ContainerHeader h = decode_header(bytes, kCoefficientMagic);
  const int n = static_cast<int>(h.n);
  CoefficientCube c{{n, h.j0, h.variant}, {}};
  c.planes.reserve(h.eta);
  const char* p = bytes.data() + kContainerHeaderSize;
  for (std::uint32_t i = 0; i < h.eta; ++i) {
    ComplexPlane plane(n);
    for (Complex& z : plane.values()) {
      const double re = finite_or_throw(get_f64(p));
      p += 8;
      double im = 0.0;
      if (!h.real_only()) {
        im = finite_or_throw(get_f64(p));
        p += 8;
      }
      z = {re, im};
    }
    c.planes.push_back(std::move(plane));
  }
  return c;
}

void write_spectra(const SpectraCube& spectra, const fs::path& path) {
  for (const auto& p : spectra.planes) require_finite(p);
  ContainerHeader h;
  h.magic = kSpectraMagic;
  h.variant = spectra.variant;
  h.flags = kRealOnlyFlag;
  h.n = static_cast<std::uint32_t>(spectra.size());
  h.j0 = static_cast<std::uint16_t>(spectra.j0());
  h.eta = static_cast<std::uint32_t>(spectra.eta());
  write_atomically(path, [&](std::ostream& os) {
    const std::string head = encode_header(h);
    os.write(head.data(), static_cast<std::streamsize>(head.size()));
    std::string buf;
    for (const auto& plane : spectra.planes) {
      buf.clear();
      buf.reserve(plane.count() * 8);
      for (double v : plane.values()) put_f64(buf, v);
      os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    }
  });
}

SpectraCube read_spectra(const fs::path& path) { return decode_spectra(slurp(path)); }

SpectraCube decode_spectra(std::string_view bytes) {
  const ContainerHeader h = decode_header(bytes, kSpectraMagic);
  SpectraCube cube;
  cube.grid = build_grid(static_cast<int>(h.n), static_cast<int>(h.j0));
  cube.variant = h.variant;
  const int n = static_cast<int>(h.n);
  const char* p = bytes.data() + kContainerHeaderSize;
  cube.planes.reserve(h.eta);
  for (std::uint32_t i = 0; i < h.eta; ++i) {
    RealPlane plane(n);
    for (double& v : plane.values()) {
      v = finite_or_throw(get_f64(p));
      p += 8;
    }
    cube.planes.push_back(std::move(plane));
  }
  return cube;
}

ContainerHeader read_header(const fs::path& path) { return decode_header(slurp(path), {}); }

ContainerHeader decode_header(std::string_view bytes) { return decode_header(bytes, {}); }

std::shared_ptr<const SpectraCube> load_spectra(int n, std::optional<int> j0, ShearletVariant variant,
                                                const std::optional<fs::path>& cache_file) {
  const SpectraKey key{n, j0.value_or(scales_for_size(n)), variant};
  auto& cache = SpectraCache::global();
  if (cache.contains(key)) return cache.get(key.n, key.j0, key.variant);

  if (cache_file && fs::exists(*cache_file)) {
    try {
      auto cube = std::make_shared<const SpectraCube>(read_spectra(*cache_file));
      if (cube->key() == key) {
        cache.insert(cube);
        return cube;
      }
    } catch (const Error&) {
      // unreadable or stale cache file: rebuild and overwrite below
    }
  }
  auto cube = cache.get(key.n, key.j0, key.variant);
  if (cache_file) write_spectra(*cube, *cache_file);
  return cube;
}

}  // namespace fshear
