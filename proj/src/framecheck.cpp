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

#include "fshear/framecheck.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "fshear/errors.hpp"
#include "fshear/transform.hpp"
#include "sum.hpp"

namespace fshear {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double squared_norm(std::span<const double> v) {
  detail::CompensatedSum s;
  for (double x : v) s.add(x * x);
  return s.value();
}

double max_abs_diff(const Image& a, const Image& b) {
  double m = 0.0;
  auto x = a.values();
  auto y = b.values();
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

double parseval_error(const Image& f, const CoefficientCube& c) {
  const double input = squared_norm(f.values());
  detail::CompensatedSum total;
  for (double e : band_energy(c)) total.add(e);
  const double coeffs = total.value();
  if (input == 0.0) return coeffs == 0.0 ? 0.0 : INFINITY;
  return std::abs(input - coeffs) / input;
}

}  // namespace

Image random_image(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Image img(n);
  for (double& v : img.values()) v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return img;
}

double check_tiling(const SpectraCube& spectra) {
  const int n = spectra.size();
  std::vector<double> sum(static_cast<std::size_t>(n) * n, 0.0);
  for (const auto& plane : spectra.planes) {
    auto v = plane.values();
    for (std::size_t p = 0; p < sum.size(); ++p) sum[p] += v[p] * v[p];
  }
  double dev = 0.0;
  for (double s : sum) dev = std::max(dev, std::abs(s - 1.0));
  return dev;
}

bool is_parseval(const SpectraCube& spectra, double tol) { return check_tiling(spectra) <= tol; }

double check_roundtrip(int n, int trials, ShearletVariant variant, std::uint64_t seed, std::optional<int> j0) {
  if (trials < 1) throw ParameterError("check_roundtrip needs at least one trial");
  const auto spectra = SpectraCache::global().get(n, j0, variant);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Image f = random_image(n, seed + static_cast<std::uint64_t>(t));
    worst = std::max(worst, max_abs_diff(f, inverse(forward(f, *spectra), *spectra)));
  }
  return worst;
}

double check_parseval(int n, int trials, ShearletVariant variant, std::uint64_t seed, std::optional<int> j0) {
  if (trials < 1) throw ParameterError("check_parseval needs at least one trial");
  const auto spectra = SpectraCache::global().get(n, j0, variant);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Image f = random_image(n, seed + static_cast<std::uint64_t>(t));
    worst = std::max(worst, parseval_error(f, forward(f, *spectra)));
  }
  return worst;
}

FrameReport check_frame(int n, ShearletVariant variant, std::optional<int> j0, int trials, std::uint64_t seed) {
  if (trials < 1) throw ParameterError("check_frame needs at least one trial");
  FrameReport r;
  r.n = n;
  r.variant = variant;

  auto t0 = Clock::now();
  const auto spectra = std::make_shared<const SpectraCube>(build_spectra(n, j0, variant));
  const double build_s = seconds_since(t0);
  r.j0 = spectra->j0();
  r.max_tiling_deviation = check_tiling(*spectra);

  for (int t = 0; t < trials; ++t) {
    const Image f = random_image(n, seed + static_cast<std::uint64_t>(t));
    t0 = Clock::now();
    const CoefficientCube c = forward(f, *spectra);
    const double fwd = seconds_since(t0);
    t0 = Clock::now();
    const Image back = inverse(c, *spectra);
    const double inv = seconds_since(t0);
    if (t == 0) {
      r.forward_seconds = fwd;
      r.inverse_seconds = inv;
      r.cold_seconds = build_s + fwd;
    }
    r.roundtrip_max_error = std::max(r.roundtrip_max_error, max_abs_diff(f, back));
    r.parseval_rel_error = std::max(r.parseval_rel_error, parseval_error(f, c));
  }
  return r;
}

std::vector<FrameReport> bench(const std::vector<int>& sizes, const BenchOptions& options) {
  if (options.repeats < 1) throw ParameterError("bench needs repeats >= 1");
  const TransformOptions topt{options.parallel};
  std::vector<FrameReport> reports;
  for (int n : sizes) {
    FrameReport r;
    r.n = n;
    r.variant = options.variant;
    const Image f = random_image(n, options.seed);

    std::shared_ptr<const SpectraCube> spectra;
    double cold = 0.0;
    for (int i = 0; i < options.repeats; ++i) {
      spectra.reset();
      const auto t0 = Clock::now();
      spectra = std::make_shared<const SpectraCube>(build_spectra(n, std::nullopt, options.variant));
      const CoefficientCube c = forward(f, *spectra, topt);
      cold += seconds_since(t0);
    }

    CoefficientCube coeffs;
    double warm = 0.0;
    for (int i = 0; i < options.repeats; ++i) {
      coeffs = CoefficientCube{};
      const auto t0 = Clock::now();
      coeffs = forward(f, *spectra, topt);
      warm += seconds_since(t0);
    }

    Image back;
    double inv = 0.0;
    for (int i = 0; i < options.repeats; ++i) {
      const auto t0 = Clock::now();
      back = inverse(coeffs, *spectra, topt);
      inv += seconds_since(t0);
    }

    const double reps = options.repeats;
    r.j0 = spectra->j0();
    r.cold_seconds = cold / reps;
    r.forward_seconds = warm / reps;
    r.inverse_seconds = inv / reps;
    r.max_tiling_deviation = check_tiling(*spectra);
    r.roundtrip_max_error = max_abs_diff(f, back);
    r.parseval_rel_error = parseval_error(f, coeffs);
    reports.push_back(r);
  }
  return reports;
}

std::string report_tsv_header() {
  return "n\tj0\tvariant\ttiling_dev\troundtrip_err\tparseval_rel\tcold_s\tforward_s\tinverse_s";
}

std::string to_tsv(const FrameReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%d\t%d\t%s\t%.17g\t%.17g\t%.17g\t%.17g\t%.17g\t%.17g", r.n, r.j0,
                std::string(to_string(r.variant)).c_str(), r.max_tiling_deviation, r.roundtrip_max_error,
                r.parseval_rel_error, r.cold_seconds, r.forward_seconds, r.inverse_seconds);
  return buf;
}

FrameReport parse_tsv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  if (fields.size() != 9) throw FormatError("report row must have 9 tab-separated fields");

  auto number = [](std::string_view s, auto& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw FormatError("malformed report field '" + std::string(s) + "'");
  };
  FrameReport r;
  number(fields[0], r.n);
  number(fields[1], r.j0);
  r.variant = parse_variant(fields[2]);
  number(fields[3], r.max_tiling_deviation);
  number(fields[4], r.roundtrip_max_error);
  number(fields[5], r.parseval_rel_error);
  number(fields[6], r.cold_seconds);
  number(fields[7], r.forward_seconds);
  number(fields[8], r.inverse_seconds);
  return r;
}

}  // namespace fshear
