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


#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cstring>
#include <optional>
#include <string>

#include "fshear/fshear.hpp"

namespace py = pybind11;

namespace {

using fshear::Complex;
using fshear::ShearletVariant;

template <typename T>
using CArray = py::array_t<T, py::array::c_style | py::array::forcecast>;

fshear::Image to_image(const CArray<double>& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1))
    throw fshear::DimensionError("expected a square 2-D array");
  const auto n = static_cast<int>(a.shape(0));
  return fshear::Image(n, std::vector<double>(a.data(), a.data() + a.size()));
}

template <typename T>
py::array_t<T> stack(const std::vector<fshear::SquareArray<T>>& planes, int n) {
  py::array_t<T> out({static_cast<py::ssize_t>(planes.size()), static_cast<py::ssize_t>(n), static_cast<py::ssize_t>(n)});
  T* dst = out.mutable_data();
  for (const auto& p : planes) {
    std::memcpy(dst, p.data(), sizeof(T) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    dst += static_cast<std::ptrdiff_t>(n) * n;
  }
  return out;
}

py::array_t<double> from_image(const fshear::SquareArray<double>& img) {
  const auto n = static_cast<py::ssize_t>(img.size());
  py::array_t<double> out({n, n});
  std::copy(img.data(), img.data() + img.count(), out.mutable_data());
  return out;
}

fshear::CoefficientCube to_cube(const CArray<Complex>& a, const fshear::SpectraCube& spectra) {
  const int n = spectra.size();
  if (a.ndim() != 3 || a.shape(0) != spectra.eta() || a.shape(1) != n || a.shape(2) != n)
    throw fshear::DimensionError("coefficients must have shape (eta, n, n) = (" + std::to_string(spectra.eta()) +
                                 ", " + std::to_string(n) + ", " + std::to_string(n) + ")");
  fshear::CoefficientCube cube{spectra.key(), {}};
  const Complex* src = a.data();
  for (int i = 0; i < spectra.eta(); ++i) {
    fshear::ComplexPlane p(n);
    std::copy(src, src + p.count(), p.data());
    src += p.count();
    cube.planes.push_back(std::move(p));
  }
  return cube;
}

ShearletVariant variant_of(const std::string& s) { return fshear::parse_variant(s); }

py::dict report_dict(const fshear::FrameReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["j0"] = r.j0;
  d["variant"] = std::string(fshear::to_string(r.variant));
  d["max_tiling_deviation"] = r.max_tiling_deviation;
  d["roundtrip_max_error"] = r.roundtrip_max_error;
  d["parseval_rel_error"] = r.parseval_rel_error;
  d["cold_seconds"] = r.cold_seconds;
  d["forward_seconds"] = r.forward_seconds;
  d["inverse_seconds"] = r.inverse_seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_fshear, m) {
  m.doc() = "Translation-invariant discrete shearlet transform";

  static py::exception<fshear::Error> error(m, "FshearError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const fshear::IndexError& e) {
      PyErr_SetString(PyExc_IndexError, e.what());
    } catch (const fshear::Error& e) {
      error(e.what());
    }
  });

  m.def("meyer_aux", py::vectorize(fshear::meyer_aux));
  m.def("meyer_bump", py::vectorize(fshear::meyer_bump));
  m.def("psi1_hat", py::vectorize(fshear::psi1_hat));
  m.def("psi2_hat", py::vectorize(fshear::psi2_hat));
  m.def("scaling_1d", py::vectorize(fshear::scaling_1d));

  m.def("scales_for_size", &fshear::scales_for_size, py::arg("n"));
  m.def("band_count", &fshear::band_count, py::arg("j0"));

  m.def(
      "index_to_params",
      [](int flat, int j0) {
        const auto b = fshear::index_to_params(flat, j0);
        return py::make_tuple(std::string(fshear::to_string(b.kind)), b.scale, b.shear);
      },
      py::arg("flat"), py::arg("j0"), "(kind, j, k) of a 1-based band index");
  m.def(
      "params_to_index",
      [](const std::string& kind, int j, int k, int j0) {
        fshear::BandKind bk;
        if (kind == "scaling") bk = fshear::BandKind::Scaling;
        else if (kind == "horizontal") bk = fshear::BandKind::Horizontal;
        else if (kind == "vertical") bk = fshear::BandKind::Vertical;
        else if (kind == "diagonal") bk = fshear::BandKind::Diagonal;
        else throw fshear::ParameterError("unknown band kind '" + kind + "'");
        return fshear::params_to_index(bk, j, k, j0);
      },
      py::arg("kind"), py::arg("j"), py::arg("k"), py::arg("j0"));

  py::class_<fshear::SpectraCube, std::shared_ptr<fshear::SpectraCube>>(m, "Spectra")
      .def_property_readonly("n", &fshear::SpectraCube::size)
      .def_property_readonly("j0", &fshear::SpectraCube::j0)
      .def_property_readonly("eta", &fshear::SpectraCube::eta)
      .def_property_readonly("variant", [](const fshear::SpectraCube& s) { return std::string(fshear::to_string(s.variant)); })
      .def_property_readonly("axis", [](const fshear::SpectraCube& s) { return s.grid.axis; })
      .def_property_readonly("planes", [](const fshear::SpectraCube& s) { return stack(s.planes, s.size()); })
      .def("__repr__", [](const fshear::SpectraCube& s) {
        return "<Spectra n=" + std::to_string(s.size()) + " j0=" + std::to_string(s.j0()) +
               " eta=" + std::to_string(s.eta()) + " variant=" + std::string(fshear::to_string(s.variant)) + ">";
      });

  m.def(
      "build_spectra",
      [](int n, std::optional<int> scales, const std::string& variant) {
        return std::make_shared<fshear::SpectraCube>(fshear::build_spectra(n, scales, variant_of(variant)));
      },
      py::arg("n"), py::arg("scales") = py::none(), py::arg("variant") = "classic");

  m.def(
      "forward",
      [](const CArray<double>& image, const fshear::SpectraCube& spectra, bool parallel) {
        const auto img = to_image(image);
        fshear::CoefficientCube c;
        {
          py::gil_scoped_release release;
          c = fshear::forward(img, spectra, {parallel});
        }
        return stack(c.planes, c.size());
      },
      py::arg("image"), py::arg("spectra"), py::arg("parallel") = false,
      "Coefficients of shape (eta, n, n), complex128");

  m.def(
      "inverse",
      [](const CArray<Complex>& coeffs, const fshear::SpectraCube& spectra, bool parallel) {
        const auto cube = to_cube(coeffs, spectra);
        fshear::Image img;
        {
          py::gil_scoped_release release;
          img = fshear::inverse(cube, spectra, {parallel});
        }
        return from_image(img);
      },
      py::arg("coeffs"), py::arg("spectra"), py::arg("parallel") = false);

  m.def(
      "band_energy",
      [](const CArray<Complex>& coeffs, const fshear::SpectraCube& spectra) {
        return fshear::band_energy(to_cube(coeffs, spectra));
      },
      py::arg("coeffs"), py::arg("spectra"));

  m.def("check_tiling", &fshear::check_tiling, py::arg("spectra"));
  m.def(
      "check_roundtrip",
      [](int n, int trials, const std::string& variant, std::uint64_t seed) {
        return fshear::check_roundtrip(n, trials, variant_of(variant), seed);
      },
      py::arg("n"), py::arg("trials") = 5, py::arg("variant") = "classic", py::arg("seed") = 0);
  m.def(
      "check_parseval",
      [](int n, int trials, const std::string& variant, std::uint64_t seed) {
        return fshear::check_parseval(n, trials, variant_of(variant), seed);
      },
      py::arg("n"), py::arg("trials") = 5, py::arg("variant") = "classic", py::arg("seed") = 0);
  m.def(
      "check_frame",
      [](int n, const std::string& variant, std::optional<int> scales, int trials, std::uint64_t seed) {
        return report_dict(fshear::check_frame(n, variant_of(variant), scales, trials, seed));
      },
      py::arg("n"), py::arg("variant") = "classic", py::arg("scales") = py::none(), py::arg("trials") = 5,
      py::arg("seed") = 0);

  m.def(
      "random_image", [](int n, std::uint64_t seed) { return from_image(fshear::random_image(n, seed)); },
      py::arg("n"), py::arg("seed") = 0);
  m.def(
      "render",
      [](const std::string& shape, int n, double center_x, double center_y, double size, double intensity) {
        return from_image(fshear::render({fshear::parse_shape(shape), center_x, center_y, size, intensity}, n));
      },
      py::arg("shape"), py::arg("n"), py::arg("center_x") = 0.5, py::arg("center_y") = 0.5, py::arg("size") = 0.5,
      py::arg("intensity") = 1.0);

  m.def(
      "read_image", [](const std::string& path) { return from_image(fshear::read_image(path)); }, py::arg("path"));
  m.def(
      "write_image", [](const CArray<double>& image, const std::string& path) { fshear::write_image(to_image(image), path); },
      py::arg("image"), py::arg("path"));
}
