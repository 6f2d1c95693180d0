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
#include <set>
#include <thread>

#include "fshear/errors.hpp"
#include "fshear/framecheck.hpp"
#include "fshear/spectra.hpp"
#include "oracles.hpp"

namespace {

using namespace fshear;

constexpr auto kClassic = ShearletVariant::MeyerClassic;
constexpr auto kSmooth = ShearletVariant::MeyerSmooth;

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// ---------------------------------------------------------------- indexing

TEST(Index, Examples) {
  EXPECT_EQ(index_to_params(1, 3).kind, BandKind::Scaling);
  EXPECT_EQ(index_to_params(2, 1), (BandIndex{2, BandKind::Horizontal, 0, 0}));
  EXPECT_EQ(index_to_params(3, 1), (BandIndex{3, BandKind::Diagonal, 0, -1}));
  EXPECT_EQ(index_to_params(4, 1), (BandIndex{4, BandKind::Vertical, 0, 0}));
  EXPECT_EQ(index_to_params(5, 1), (BandIndex{5, BandKind::Diagonal, 0, 1}));
  EXPECT_EQ(index_to_params(13, 2).flat, 13);
  EXPECT_THROW(index_to_params(14, 2), IndexError);
  EXPECT_THROW(index_to_params(0, 2), IndexError);
  EXPECT_EQ(params_to_index(BandKind::Scaling, 0, 0, 2), 1);
  EXPECT_EQ(params_to_index(BandKind::Horizontal, 0, 0, 2), 2);
}

TEST(Index, MatchesBruteForceEnumeration) {
  for (int j0 = 1; j0 <= 5; ++j0) {
    const auto ref = oracle::enumerate_bands(j0);
    ASSERT_EQ(static_cast<int>(ref.size()), band_count(j0));
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& b : ref) {
      ASSERT_EQ(index_to_params(b.flat, j0), b) << "j0=" << j0 << " flat=" << b.flat;
      ASSERT_EQ(params_to_index(b, j0), b.flat);
      seen.insert({static_cast<int>(b.kind), b.scale, b.shear});
    }
    ASSERT_EQ(seen.size(), ref.size());
  }
}

TEST(Index, PerScaleCount) {
  for (int j0 = 1; j0 <= 5; ++j0) {
    std::vector<int> per(static_cast<std::size_t>(j0), 0);
    for (int f = 2; f <= band_count(j0); ++f) ++per[idx(index_to_params(f, j0).scale)];
    for (int j = 0; j < j0; ++j) EXPECT_EQ(per[idx(j)], 1 << (j + 2));
  }
}

TEST(Index, InvalidParams) {
  EXPECT_THROW(params_to_index(BandKind::Horizontal, 1, 3, 2), ParameterError);
  EXPECT_THROW(params_to_index(BandKind::Horizontal, 1, 2, 2), ParameterError);
  EXPECT_THROW(params_to_index(BandKind::Diagonal, 1, 1, 2), ParameterError);
  EXPECT_THROW(params_to_index(BandKind::Vertical, 2, 0, 2), ParameterError);
  EXPECT_THROW(params_to_index(BandKind::Vertical, -1, 0, 2), ParameterError);
}

// ---------------------------------------------------------------- cones

TEST(Cones, Examples) {
  EXPECT_TRUE(in_cone(Cone::Horizontal, 2, 1));
  EXPECT_TRUE(in_cone(Cone::Seam, 1, 1));
  EXPECT_TRUE(in_cone(Cone::Seam, -1, 1));
  EXPECT_TRUE(in_cone(Cone::Vertical, 0, 0.5));
  EXPECT_FALSE(in_cone(Cone::Horizontal, 0.25, 0));
  EXPECT_FALSE(in_cone(Cone::Seam, 0.25, 0.25));
}

TEST(Cones, PartitionAndCounts) {
  for (int n : {17, 32, 64, 65, 100}) {
    const auto g = build_grid(n);
    const auto h = cone_indicator(g, Cone::Horizontal);
    const auto v = cone_indicator(g, Cone::Vertical);
    const auto x = cone_indicator(g, Cone::Seam);
    long nh = 0, nv = 0;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const double w1 = g.axis[idx(c)], w2 = g.axis[idx(r)];
        const int hits = h(r, c) + v(r, c) + x(r, c);
        const bool outer = std::max(std::abs(w1), std::abs(w2)) >= 0.5;
        ASSERT_EQ(hits, outer ? 1 : 0) << n << " " << r << " " << c;
        ASSERT_EQ(static_cast<bool>(x(r, c)), outer && std::abs(w1) == std::abs(w2));
        nh += h(r, c);
        nv += v(r, c);
      }
    if (n % 2) EXPECT_EQ(nh, nv) << n;
  }
}

// ---------------------------------------------------------------- point values

TEST(Spectrum, PointExamples) {
  EXPECT_DOUBLE_EQ(shearlet_value(1.5, 0.0, {2, BandKind::Horizontal, 0, 0}, kClassic), 1.0);
  EXPECT_EQ(scaling_value(0, 0, kClassic), 1.0);
  EXPECT_EQ(scaling_value(0, 0, kSmooth), 1.0);
  EXPECT_NEAR(scaling_value(0.75, 0.2, kClassic), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(scaling_value(0.75, 0.75, kSmooth), 0.5, 1e-15);
  for (int j = 0; j < 4; ++j) {
    const int m = 1 << j;
    for (double w : {0.75, 1.0, 1.5, 3.0}) {
      const double w1 = std::ldexp(w, 2 * j);
      EXPECT_DOUBLE_EQ(shearlet_value(w1, w1, {0, BandKind::Diagonal, j, -m}, kClassic), psi1_hat(w));
      EXPECT_DOUBLE_EQ(shearlet_value(w1, -w1, {0, BandKind::Diagonal, j, m}, kClassic), psi1_hat(w));
    }
  }
}

TEST(Spectrum, PlanesMatchOracle) {
  for (auto variant : {kClassic, kSmooth}) {
    for (int n : {16, 17, 32, 65}) {
      const auto cube = build_spectra(n, std::nullopt, variant);
      const auto ax = oracle::axis(cube.grid.n_internal, cube.j0());
      for (int f = 1; f <= cube.eta(); ++f) {
        const auto b = index_to_params(f, cube.j0());
        const auto& p = cube.planes[idx(f - 1)];
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) {
            const auto ref = oracle::shearlet(ax[idx(c)], ax[idx(r)], b.kind, b.scale, b.shear,
                                              variant == kSmooth);
            ASSERT_NEAR(p(r, c), static_cast<double>(ref), 1e-12)
                << to_string(variant) << " n=" << n << " flat=" << f << " at " << r << "," << c;
          }
      }
    }
  }
}

TEST(Spectrum, HorizontalVanishesOnZeroColumn) {
  const auto cube = build_spectra(65);
  const int c0 = cube.grid.center();
  for (int f = 2; f <= cube.eta(); ++f) {
    const auto b = index_to_params(f, cube.j0());
    if (b.kind != BandKind::Horizontal) continue;
    for (int r = 0; r < 65; ++r) ASSERT_EQ(cube.planes[idx(f - 1)](r, c0), 0.0);
  }
}

TEST(Spectrum, ScalingPlaneRequiresScalingFunction) {
  EXPECT_THROW(shearlet_spectrum(build_grid(16), {1, BandKind::Scaling, 0, 0}, kClassic), ParameterError);
}

// ---------------------------------------------------------------- cube properties

TEST(Cube, Shapes) {
  auto c = build_spectra(64);
  EXPECT_EQ(c.eta(), 29);
  EXPECT_EQ(c.planes.front().size(), 64);
  EXPECT_EQ(build_spectra(17, 2).eta(), 13);
}

TEST(Cube, ParsevalTiling) {
  for (auto variant : {kClassic, kSmooth})
    for (int n : {32, 64, 65, 128, 256}) {
      const auto cube = build_spectra(n, std::nullopt, variant);
      EXPECT_LE(check_tiling(cube), 1e-13) << to_string(variant) << " n=" << n;
    }
  EXPECT_LE(check_tiling(build_spectra(65, 3)), 1e-13);
}

TEST(Cube, TilingHoldsForAnyScaleCount) {
  // the extent grows with the scale count, so the grid never leaves the plateau
  for (int j0 = 1; j0 <= 5; ++j0) EXPECT_LE(check_tiling(build_spectra(64, j0)), 1e-13) << j0;
}

TEST(Cube, PointSymmetricOnOddGrid) {
  for (auto variant : {kClassic, kSmooth}) {
    const auto cube = build_spectra(65, std::nullopt, variant);
    for (const auto& p : cube.planes)
      for (int r = 0; r < 65; ++r)
        for (int c = 0; c < 65; ++c) ASSERT_EQ(p(r, c), p(64 - r, 64 - c));
  }
}

TEST(Cube, EvenSizeIsCroppedOddGrid) {
  const auto even = build_spectra(64);
  const auto odd = build_spectra(65, 3);
  ASSERT_EQ(even.grid.axis, odd.grid.axis);
  for (int f = 0; f < even.eta(); ++f)
    for (int r = 0; r < 64; ++r)
      for (int c = 0; c < 64; ++c) ASSERT_EQ(even.planes[idx(f)](r, c), odd.planes[idx(f)](r, c));
}

TEST(Cube, SupportDiscipline) {
  for (auto variant : {kClassic, kSmooth}) {
    const auto cube = build_spectra(64, std::nullopt, variant);
    const auto h = cone_indicator(cube.grid, Cone::Horizontal);
    const auto v = cone_indicator(cube.grid, Cone::Vertical);
    const auto x = cone_indicator(cube.grid, Cone::Seam);
    for (int f = 2; f <= cube.eta(); ++f) {
      const auto b = index_to_params(f, cube.j0());
      const auto& p = cube.planes[idx(f - 1)];
      for (int r = 0; r < 64; ++r)
        for (int c = 0; c < 64; ++c) {
          const bool allowed = b.kind == BandKind::Horizontal ? h(r, c)
                               : b.kind == BandKind::Vertical ? v(r, c)
                                                              : (h(r, c) || v(r, c) || x(r, c));
          if (!allowed) ASSERT_EQ(p(r, c), 0.0) << f << " " << r << " " << c;
          ASSERT_GE(p(r, c), 0.0);
        }
    }
  }
}

TEST(Cube, DiagonalContinuousAcrossSeam) {
  // fine sampling through the point evaluator
  constexpr double eps = 1e-7;
  for (auto variant : {kClassic, kSmooth})
    for (int j = 0; j < 4; ++j) {
      const int m = 1 << j;
      for (int sign : {-1, 1}) {
        const BandIndex b{0, BandKind::Diagonal, j, sign * m};
        for (double w = 0.5; w <= std::ldexp(4.0, 2 * j); w += 0.01 * (1 << (2 * j))) {
          const double w2 = -sign * w;
          const double at = shearlet_value(w, w2, b, variant);
          ASSERT_NEAR(shearlet_value(w, w2 + eps, b, variant), at, 1e-4);
          ASSERT_NEAR(shearlet_value(w, w2 - eps, b, variant), at, 1e-4);
        }
      }
    }
}

// On the grid the step across the seam shrinks as the scale refines. At the
// coarse scales the band is about one sample wide and steps reach 1, so an
// absolute bound is only asserted for the finest scale of N >= 128.
TEST(Cube, DiagonalSeamStepOnGrid) {
  for (auto variant : {kClassic, kSmooth})
    for (int n : {64, 65, 128, 256}) {
      const auto cube = build_spectra(n, std::nullopt, variant);
      const auto& ax = cube.grid.axis;
      std::vector<double> worst(idx(cube.j0()), 0.0);
      for (int f = 2; f <= cube.eta(); ++f) {
        const auto b = index_to_params(f, cube.j0());
        if (b.kind != BandKind::Diagonal) continue;
        const auto& p = cube.planes[idx(f - 1)];
        for (int r = 1; r + 1 < n; ++r)
          for (int c = 0; c < n; ++c) {
            if (std::abs(ax[idx(r)]) != std::abs(ax[idx(c)]) || std::abs(ax[idx(c)]) < 0.5) continue;
            auto& w = worst[idx(b.scale)];
            w = std::max({w, std::abs(p(r + 1, c) - p(r, c)), std::abs(p(r - 1, c) - p(r, c))});
          }
      }
      for (int j = 2; j < cube.j0(); ++j) EXPECT_LT(worst[idx(j)], worst[idx(j - 1)]) << n << " j=" << j;
      if (n >= 128) EXPECT_LE(worst.back(), 0.25) << to_string(variant) << " n=" << n;
    }
}

TEST(Cube, SmoothRadialTelescopes) {
  for (int j0 = 1; j0 <= 4; ++j0) {
    const double top = std::ldexp(1.0, 2 * j0 - 1);
    for (double w1 = -top; w1 <= top; w1 += top / 97)
      for (double w2 = -top; w2 <= top; w2 += top / 89) {
        double sum = scaling_value(w1, w2, kSmooth);
        sum *= sum;
        for (int j = 0; j < j0; ++j) {
          const double r = smooth_radial(std::ldexp(w1, -2 * j), std::ldexp(w2, -2 * j));
          sum += r * r;
        }
        ASSERT_NEAR(sum, 1.0, 1e-13) << w1 << " " << w2;
      }
  }
}

TEST(Cube, Deterministic) {
  const auto a = build_spectra(48, std::nullopt, kSmooth);
  const auto b = build_spectra(48, std::nullopt, kSmooth);
  ASSERT_EQ(a.planes, b.planes);
}

// ---------------------------------------------------------------- plug-in spectra

TEST(Generator, LibraryPlanesPassTiling) {
  const auto cube = build_spectra(32, std::nullopt, [](const FrequencyGrid& g, const BandIndex& b) {
    return b.kind == BandKind::Scaling ? scaling_spectrum(g, kClassic) : shearlet_spectrum(g, b, kClassic);
  });
  EXPECT_TRUE(cube.custom);
  EXPECT_TRUE(is_parseval(cube));
}

TEST(Generator, BrokenPlanesFailTiling) {
  const auto cube = build_spectra(32, std::nullopt, [](const FrequencyGrid& g, const BandIndex& b) {
    if (b.kind == BandKind::Scaling) return scaling_spectrum(g, kClassic);
    auto p = shearlet_spectrum(g, b, kClassic);
    if (b.flat == 7)
      for (double& x : p.values()) x *= 0.9;
    return p;
  });
  EXPECT_FALSE(is_parseval(cube));
  EXPECT_GT(check_tiling(cube), 1e-3);
}

TEST(Generator, WrongPlaneSize) {
  EXPECT_THROW(build_spectra(32, std::nullopt, [](const FrequencyGrid&, const BandIndex&) { return RealPlane(31); }),
               DimensionError);
}

// ---------------------------------------------------------------- cache

TEST(Cache, ReusesEntries) {
  SpectraCache cache;
  auto a = cache.get(24, std::nullopt, kClassic);
  auto b = cache.get(24, 2, kClassic);
  EXPECT_EQ(a.get(), b.get());
  EXPECT_TRUE(cache.contains({24, 2, kClassic}));
  EXPECT_FALSE(cache.contains({24, 2, kSmooth}));
  auto c = cache.get(24, std::nullopt, kSmooth);
  EXPECT_NE(a.get(), c.get());
  EXPECT_EQ(cache.size(), 2u);
  cache.clear();
  EXPECT_EQ(cache.size(), 0u);
}

TEST(Cache, ConcurrentGet) {
  SpectraCache cache;
  std::vector<std::shared_ptr<const SpectraCube>> got(8);
  {
    std::vector<std::jthread> workers;
    for (std::size_t i = 0; i < got.size(); ++i)
      workers.emplace_back([&, i] { got[i] = cache.get(40, std::nullopt, kClassic); });
  }
  EXPECT_EQ(cache.size(), 1u);
  for (const auto& g : got) EXPECT_EQ(g->planes, got[0]->planes);
}

}  // namespace
