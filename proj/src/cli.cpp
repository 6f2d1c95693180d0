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

#include "fshear/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "fshear/errors.hpp"
#include "fshear/framecheck.hpp"
#include "fshear/imagegen.hpp"
#include "fshear/io.hpp"
#include "fshear/spectra.hpp"
#include "fshear/transform.hpp"

namespace fshear {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::optional<int> opt_scales(int scales) { return scales > 0 ? std::optional<int>(scales) : std::nullopt; }

std::optional<std::filesystem::path> opt_path(const std::string& p) {
  return p.empty() ? std::nullopt : std::optional<std::filesystem::path>(p);
}

// --- transform -------------------------------------------------------------

struct TransformArgs {
  std::string input, output, variant = "classic", cache;
  int scales = 0;
  bool real_only = false, parallel = false;
};

int cmd_transform(const TransformArgs& a, Streams s) {
  const Image img = a.input == "-" ? decode_pgm(read_all(s.in)) : read_image(a.input);
  const auto spectra = load_spectra(img.size(), opt_scales(a.scales), parse_variant(a.variant), opt_path(a.cache));
  const CoefficientCube c = forward(img, *spectra, {a.parallel});
  if (a.output == "-") {
    write_coefficients(c, s.out, a.real_only);
  } else {
    write_coefficients(c, a.output, a.real_only);
    s.out << "n=" << c.key.n << " j0=" << c.key.j0 << " eta=" << c.eta() << " variant=" << to_string(c.key.variant)
          << "\n";
  }
  return 0;
}

// --- inverse ---------------------------------------------------------------

struct InverseArgs {
  std::string input, output, cache;
  bool parallel = false;
};

int cmd_inverse(const InverseArgs& a, Streams s) {
  const CoefficientCube c = a.input == "-" ? decode_coefficients(read_all(s.in)) : read_coefficients(a.input);
  const auto spectra = load_spectra(c.key.n, c.key.j0, c.key.variant, opt_path(a.cache));
  const Image img = inverse(c, *spectra, {a.parallel});
  if (a.output == "-") {
    s.out << encode_pgm(img);
  } else {
    write_image(img, a.output);
    s.out << "n=" << img.size() << "\n";
  }
  return 0;
}

// --- spectra ---------------------------------------------------------------

struct SpectraArgs {
  int size = 0, scales = 0;
  std::string variant = "classic", output;
};

int cmd_spectra(const SpectraArgs& a, Streams s) {
  const SpectraCube cube = build_spectra(a.size, opt_scales(a.scales), parse_variant(a.variant));
  if (cube.grid.scales_exceed_natural)
    s.err << "warning: " << cube.j0() << " scales exceed the " << scales_for_size(a.size)
          << " that fit a " << a.size << "x" << a.size << " image\n";
  write_spectra(cube, a.output);
  s.out << "n=" << cube.size() << " j0=" << cube.j0() << " eta=" << cube.eta() << " variant=" << to_string(cube.variant)
        << "\n";
  return 0;
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
  int size = 0, scales = 0, trials = 5;
  std::uint64_t seed = 0;
  std::string variant = "classic";
};

int cmd_check(const CheckArgs& a, Streams s) {
  const FrameReport r = check_frame(a.size, parse_variant(a.variant), opt_scales(a.scales), a.trials, a.seed);
  s.out << "tiling_dev=" << fmt("%.3e", r.max_tiling_deviation) << "\n"
        << "roundtrip_err=" << fmt("%.3e", r.roundtrip_max_error) << "\n"
        << "parseval_rel=" << fmt("%.3e", r.parseval_rel_error) << "\n";
  const bool ok = r.max_tiling_deviation <= kTilingTolerance && r.roundtrip_max_error <= kRoundtripTolerance &&
                  r.parseval_rel_error <= kParsevalTolerance;
  return ok ? 0 : 1;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
  std::vector<int> sizes{32, 64, 128, 256, 512, 1024};
  int repeats = 5;
  std::string variant = "classic";
  bool parallel = false, full = false;
};

int cmd_bench(const BenchArgs& a, Streams s) {
  BenchOptions opt;
  opt.repeats = a.repeats;
  opt.variant = parse_variant(a.variant);
  opt.parallel = a.parallel;
  const auto reports = bench(a.sizes, opt);
  if (a.full) {
    s.out << report_tsv_header() << "\n";
    for (const auto& r : reports) s.out << to_tsv(r) << "\n";
    return 0;
  }
  s.out << "size\tcold_s\twarm_s\tinverse_s\n";
  for (const auto& r : reports)
    s.out << r.n << "\t" << fmt("%.6f", r.cold_seconds) << "\t" << fmt("%.6f", r.forward_seconds) << "\t"
          << fmt("%.6f", r.inverse_seconds) << "\n";
  return 0;
}

// --- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string shape, output;
  int size = 0;
  double extent = -1.0, intensity = 1.0;
};

int cmd_generate(const GenerateArgs& a, Streams s) {
  Shape shape;
  shape.kind = parse_shape(a.shape);
  shape.intensity = a.intensity;
  if (a.extent > 0.0) shape.size = a.extent;
  const Image img = render(shape, a.size);
  if (a.output == "-") {
    s.out << encode_pgm(img);
  } else {
    write_image(img, a.output);
    s.out << "n=" << img.size() << " shape=" << a.shape << "\n";
  }
  return 0;
}

// --- energy ----------------------------------------------------------------

int cmd_energy(const std::string& input, Streams s) {
  const std::string bytes = input == "-" ? read_all(s.in) : [&] {
    std::ifstream f(input, std::ios::binary);
    if (!f) throw IoError("cannot open '" + input + "'");
    return read_all(f);
  }();
  const ContainerHeader h = decode_header(bytes);
  std::vector<double> energy;
  if (h.magic == kSpectraMagic) {
    const SpectraCube cube = decode_spectra(bytes);
    for (const auto& p : cube.planes) {
      double e = 0.0;
      for (double v : p.values()) e += v * v;
      energy.push_back(e);
    }
  } else {
    energy = band_energy(decode_coefficients(bytes));
  }
  s.out << "# n=" << h.n << " j0=" << h.j0 << " eta=" << h.eta << " variant=" << to_string(h.variant)
        << " source=" << (h.magic == kSpectraMagic ? "spectra" : "coefficients") << "\n";
  s.out << "flat_index\tkind\tj\tk\tenergy\n";
  for (int i = 1; i <= static_cast<int>(h.eta); ++i) {
    const BandIndex b = index_to_params(i, h.j0);
    s.out << i << "\t" << to_string(b.kind) << "\t";
    if (b.kind == BandKind::Scaling)
      s.out << "-\t-";
    else
      s.out << b.scale << "\t" << b.shear;
    s.out << "\t" << fmt("%.17g", energy[static_cast<std::size_t>(i - 1)]) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Translation-invariant discrete shearlet transform", "fshear"};
  app.require_subcommand(1);
  const std::vector<std::string> variants{"classic", "smooth"};

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "forward transform of a PGM image into an .ffsc file");
  transform->add_option("input", ta.input, "input PGM ('-' for stdin)")->required();
  transform->add_option("-o,--output", ta.output, "output .ffsc ('-' for stdout)")->required();
  transform->add_option("--scales", ta.scales, "number of scales (default: floor(log2(N)/2))")
      ->check(CLI::Range(1, 14));
  transform->add_option("--variant", ta.variant, "classic|smooth")->check(CLI::IsMember(variants));
  transform->add_option("--spectra-cache", ta.cache, "spectra cache file (.ffsp), read or written");
  transform->add_flag("--real-only", ta.real_only, "store real parts only (fails if coefficients are complex)");
  transform->add_flag("--parallel", ta.parallel, "one thread per band group");

  InverseArgs ia;
  auto* inv = app.add_subcommand("inverse", "reconstruct a PGM image from an .ffsc file");
  inv->add_option("input", ia.input, "input .ffsc ('-' for stdin)")->required();
  inv->add_option("-o,--output", ia.output, "output PGM ('-' for stdout)")->required();
  inv->add_option("--spectra-cache", ia.cache, "spectra cache file (.ffsp), read or written");
  inv->add_flag("--parallel", ia.parallel, "one thread per band group");

  SpectraArgs sa;
  auto* spectra = app.add_subcommand("spectra", "write the spectra of one configuration to an .ffsp file");
  spectra->add_option("--size", sa.size, "image size N")->required()->check(CLI::Range(4, 1 << 16));
  spectra->add_option("--scales", sa.scales, "number of scales")->check(CLI::Range(1, 14));
  spectra->add_option("--variant", sa.variant, "classic|smooth")->check(CLI::IsMember(variants));
  spectra->add_option("-o,--output", sa.output, "output .ffsp")->required();

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "verify tiling, reconstruction and Parseval identity");
  check->add_option("--size", ca.size, "image size N")->required()->check(CLI::Range(4, 1 << 16));
  check->add_option("--scales", ca.scales, "number of scales")->check(CLI::Range(1, 14));
  check->add_option("--variant", ca.variant, "classic|smooth")->check(CLI::IsMember(variants));
  check->add_option("--trials", ca.trials, "random images")->check(CLI::PositiveNumber);
  check->add_option("--seed", ca.seed, "seed of the first random image");

  BenchArgs ba;
  auto* benchc = app.add_subcommand("bench", "time cold/warm forward and inverse transforms");
  benchc->add_option("--sizes", ba.sizes, "comma-separated image sizes")->delimiter(',')->check(CLI::Range(4, 1 << 16));
  benchc->add_option("--repeats", ba.repeats, "runs averaged per measurement")->check(CLI::PositiveNumber);
  benchc->add_option("--variant", ba.variant, "classic|smooth")->check(CLI::IsMember(variants));
  benchc->add_flag("--parallel", ba.parallel, "parallel per-band execution");
  benchc->add_flag("--full", ba.full, "emit full reports including accuracy columns");

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "render a synthetic test image");
  generate->add_option("--shape", ga.shape, "ball|square|rhombus|picture")
      ->required()
      ->check(CLI::IsMember({"ball", "square", "rhombus", "picture"}));
  generate->add_option("--size", ga.size, "image size N")->required()->check(CLI::Range(4, 1 << 16));
  generate->add_option("-o,--output", ga.output, "output PGM ('-' for stdout)")->required();
  generate->add_option("--extent", ga.extent, "shape size as a fraction of the image (default 0.5)");
  generate->add_option("--intensity", ga.intensity, "foreground value in [0, 1]");

  std::string energy_input;
  auto* energy = app.add_subcommand("energy", "per-band energy table of an .ffsc (or .ffsp) file");
  energy->add_option("input", energy_input, "input file ('-' for stdin)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const Streams s{in, out, err};
  try {
    if (*transform) return cmd_transform(ta, s);
    if (*inv) return cmd_inverse(ia, s);
    if (*spectra) return cmd_spectra(sa, s);
    if (*check) return cmd_check(ca, s);
    if (*benchc) return cmd_bench(ba, s);
    if (*generate) return cmd_generate(ga, s);
    if (*energy) return cmd_energy(energy_input, s);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace fshear
