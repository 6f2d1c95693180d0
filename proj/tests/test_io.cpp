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


#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <limits>

#include "fshear/errors.hpp"
#include "fshear/framecheck.hpp"
#include "fshear/io.hpp"
#include "tempdir.hpp"

namespace {

using namespace fshear;

std::string p5(int w, int h, std::initializer_list<unsigned char> px) {
  std::string s = "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  for (unsigned char c : px) s.push_back(static_cast<char>(c));
  return s;
}

// ---------------------------------------------------------------- PGM

TEST(Pgm, DecodeBinary) {
  const auto img = decode_pgm(p5(2, 2, {0, 255, 128, 64}));
  ASSERT_EQ(img.size(), 2);
  EXPECT_EQ(img(0, 0), 0.0);
  EXPECT_EQ(img(0, 1), 1.0);
  EXPECT_EQ(img(1, 0), 128.0 / 255.0);
  EXPECT_EQ(img(1, 1), 64.0 / 255.0);
}

TEST(Pgm, AsciiWithCommentsMatchesBinary) {
  const auto a = decode_pgm("P2\n# made by hand\n2 # width\n2\n# max\n255\n0 255\n128\n64\n");
  EXPECT_EQ(a, decode_pgm(p5(2, 2, {0, 255, 128, 64})));
  const auto b = decode_pgm("P5\n#c\n2 2\n255\n" + std::string("\x00\xff\x80\x40", 4));
  EXPECT_EQ(a, b);
}

TEST(Pgm, SmallMaxval) {
  const auto img = decode_pgm("P2 2 2 3 0 1 2 3");
  EXPECT_EQ(img(1, 1), 1.0);
  EXPECT_EQ(img(0, 1), 1.0 / 3.0);
}

TEST(Pgm, Errors) {
  EXPECT_THROW(decode_pgm("P6\n2 2\n255\n"), FormatError);
  EXPECT_THROW(decode_pgm(p5(3, 2, {0, 0, 0, 0, 0, 0})), FormatError);
  EXPECT_THROW(decode_pgm(p5(2, 2, {0, 0, 0})), FormatError);
  EXPECT_THROW(decode_pgm("P5\n2 2\n65535\n"), FormatError);
  EXPECT_THROW(decode_pgm("P2\n2 2\n10\n0 1 2 11\n"), FormatError);
  EXPECT_THROW(decode_pgm("P2\n2\n"), FormatError);
  try {
    decode_pgm(p5(3, 2, {0, 0, 0, 0, 0, 0}));
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("only square images are supported"), std::string::npos);
  }
}

TEST(Pgm, EncodeQuantization) {
  EXPECT_EQ(encode_pgm(Image(2, 0.0)), p5(2, 2, {0, 0, 0, 0}));
  EXPECT_EQ(encode_pgm(Image(2, 1.0)), p5(2, 2, {255, 255, 255, 255}));
  EXPECT_EQ(encode_pgm(Image(2, 0.5)), p5(2, 2, {128, 128, 128, 128}));
  EXPECT_EQ(encode_pgm(Image(2, -3.0)), p5(2, 2, {0, 0, 0, 0}));
  EXPECT_EQ(encode_pgm(Image(2, 7.0)), p5(2, 2, {255, 255, 255, 255}));
}

TEST(Pgm, RoundTripIdempotent) {
  TempDir dir;
  const auto f = random_image(17, 3);
  write_image(f, dir / "a.pgm");
  const auto once = read_image(dir / "a.pgm");
  for (int r = 0; r < 17; ++r)
    for (int c = 0; c < 17; ++c) ASSERT_LE(std::abs(once(r, c) - f(r, c)), 0.5 / 255 + 1e-15);
  write_image(once, dir / "b.pgm");
  EXPECT_EQ(read_image(dir / "b.pgm"), once);
  EXPECT_EQ(slurp(dir / "a.pgm"), slurp(dir / "b.pgm"));
  EXPECT_THROW(read_image(dir / "missing.pgm"), IoError);
}

// ---------------------------------------------------------------- containers

TEST(Container, CoefficientRoundTrip) {
  TempDir dir;
  const auto spectra = build_spectra(20, std::nullopt, ShearletVariant::MeyerSmooth);
  const auto c = forward(random_image(20, 1), spectra);
  write_coefficients(c, dir / "c.ffsc");
  const auto bytes = slurp(dir / "c.ffsc");
  EXPECT_EQ(bytes.size(), kContainerHeaderSize + static_cast<std::size_t>(c.eta()) * 20 * 20 * 16);
  EXPECT_EQ(bytes.substr(0, 4), "FFSC");
  const auto back = read_coefficients(dir / "c.ffsc");
  EXPECT_EQ(back.key, c.key);
  ASSERT_EQ(back.planes.size(), c.planes.size());
  for (std::size_t i = 0; i < c.planes.size(); ++i)
    EXPECT_EQ(std::memcmp(back.planes[i].data(), c.planes[i].data(), 20 * 20 * sizeof(Complex)), 0);

  std::ostringstream os;
  write_coefficients(c, os);
  EXPECT_EQ(os.str(), bytes);
}

TEST(Container, HeaderLayout) {
  const auto spectra = build_spectra(17, 2);
  std::ostringstream os;
  write_coefficients(forward(random_image(17, 0), spectra), os);
  const auto s = os.str();
  const unsigned char expect[18] = {'F', 'F', 'S', 'C', 1, 0, 0, 0, 17, 0, 0, 0, 2, 0, 13, 0, 0, 0};
  EXPECT_EQ(std::memcmp(s.data(), expect, 18), 0);
  const auto h = decode_header(s);
  EXPECT_EQ(h.eta, 13u);
  EXPECT_EQ(h.payload_bytes(), 13u * 17 * 17 * 16);
}

TEST(Container, RealOnlyHalvesPayload) {
  const auto spectra = build_spectra(33);
  const auto c = forward(random_image(33, 2), spectra);
  std::ostringstream full, real;
  write_coefficients(c, full);
  write_coefficients(c, real, true);
  EXPECT_EQ(full.str().size() - kContainerHeaderSize, 2 * (real.str().size() - kContainerHeaderSize));
  const auto back = decode_coefficients(real.str());
  EXPECT_TRUE(decode_header(real.str()).real_only());
  for (std::size_t i = 0; i < c.planes.size(); ++i)
    for (int r = 0; r < 33; ++r)
      for (int k = 0; k < 33; ++k) {
        ASSERT_EQ(back.planes[i](r, k).real(), c.planes[i](r, k).real());
        ASSERT_EQ(back.planes[i](r, k).imag(), 0.0);
      }
  std::ostringstream bad;
  EXPECT_THROW(write_coefficients(forward(random_image(32, 2), build_spectra(32)), bad, true), DimensionError);
}

TEST(Container, CorruptInputs) {
  const auto c = forward(random_image(16, 0), build_spectra(16));
  std::ostringstream os;
  write_coefficients(c, os);
  const std::string good = os.str();
  EXPECT_THROW(decode_coefficients(good.substr(0, good.size() - 1)), CorruptFileError);
  EXPECT_THROW(decode_coefficients(good + "x"), CorruptFileError);
  EXPECT_THROW(decode_coefficients(good.substr(0, 10)), CorruptFileError);
  auto bad = good;
  bad[0] = 'X';
  EXPECT_THROW(decode_coefficients(bad), CorruptFileError);
  bad = good;
  bad[14] = 12;
  EXPECT_THROW(decode_coefficients(bad), CorruptFileError);
  bad = good;
  bad[4] = 2;
  EXPECT_THROW(decode_coefficients(bad), CorruptFileError);
  bad = good;
  bad[6] = 5;
  EXPECT_THROW(decode_coefficients(bad), CorruptFileError);
  bad = good;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::memcpy(bad.data() + kContainerHeaderSize + 8, &nan, 8);
  EXPECT_THROW(decode_coefficients(bad), CorruptFileError);
  EXPECT_THROW(decode_spectra(good), CorruptFileError);
}

TEST(Container, RefusesNonFinite) {
  auto c = forward(random_image(16, 0), build_spectra(16));
  c.planes[2](3, 3) = {std::numeric_limits<double>::infinity(), 0.0};
  std::ostringstream os;
  EXPECT_THROW(write_coefficients(c, os), DimensionError);
}

TEST(Container, SpectraRoundTrip) {
  TempDir dir;
  const auto cube = build_spectra(24, std::nullopt, ShearletVariant::MeyerSmooth);
  write_spectra(cube, dir / "s.ffsp");
  const auto h = read_header(dir / "s.ffsp");
  EXPECT_EQ(h.magic, "FFSP");
  EXPECT_TRUE(h.real_only());
  const auto back = read_spectra(dir / "s.ffsp");
  EXPECT_EQ(back.key(), cube.key());
  EXPECT_EQ(back.planes, cube.planes);
  EXPECT_EQ(back.grid.axis, cube.grid.axis);
  EXPECT_THROW(read_coefficients(dir / "s.ffsp"), CorruptFileError);
}

TEST(LoadSpectra, UsesCacheFile) {
  TempDir dir;
  const auto path = dir / "cache.ffsp";
  const auto a = load_spectra(28, std::nullopt, ShearletVariant::MeyerClassic, path);
  EXPECT_TRUE(std::filesystem::exists(path));
  EXPECT_EQ(read_spectra(path).planes, a->planes);
  // a cache file for another key is replaced
  const auto b = load_spectra(29, std::nullopt, ShearletVariant::MeyerClassic, path);
  EXPECT_EQ(b->size(), 29);
  EXPECT_EQ(b->planes, build_spectra(29).planes);
  EXPECT_EQ(read_header(path).n, 29u);
}

TEST(LoadSpectra, ReadsMatchingCacheFile) {
  TempDir dir;
  const auto path = dir / "cache.ffsp";
  auto marked = build_spectra(36, std::nullopt, ShearletVariant::MeyerSmooth);
  marked.planes[0](0, 0) = 0.123;
  write_spectra(marked, path);
  SpectraCache::global().clear();
  const auto got = load_spectra(36, std::nullopt, ShearletVariant::MeyerSmooth, path);
  EXPECT_EQ(got->planes[0](0, 0), 0.123);
  SpectraCache::global().clear();
}

}  // namespace
