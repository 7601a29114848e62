// SPDX-License-Identifier: Apache-2.0
//
// nff - phase-conjugation near-field focusing toolkit for circular arrays
// Copyright (C) 2026 The nff authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "nff/analysis.hpp"
#include "nff/bessel.hpp"
#include "nff/closedform.hpp"
#include "nff/field.hpp"
#include "nff/geometry.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace nff;

namespace
{

py::array_t<double> positions_array(const ElementSet &el)
{
    py::array_t<double> out({static_cast<py::ssize_t>(el.size()), py::ssize_t{2}});
    auto v = out.mutable_unchecked<2>();
    const auto pos = el.positions();
    for (std::size_t i = 0; i < pos.size(); ++i)
    {
        v(i, 0) = pos[i].x;
        v(i, 1) = pos[i].y;
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_nff, m)
{
    m.doc() = "Phase-conjugation near-field focusing of uniform circular arrays";

    py::class_<Point2>(m, "Point2")
        .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
        .def(py::init([](const py::tuple &t) {
            if (t.size() != 2)
                throw py::value_error("Point2 needs an (x, y) pair");
            return Point2{t[0].cast<double>(), t[1].cast<double>()};
        }))
        .def_readwrite("x", &Point2::x)
        .def_readwrite("y", &Point2::y)
        .def("norm", &Point2::norm)
        .def("__repr__", [](const Point2 &p) { return "Point2(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")"; });
    py::implicitly_convertible<py::tuple, Point2>();

    py::enum_<ArrayKind>(m, "ArrayKind")
        .value("FullCircle", ArrayKind::FullCircle)
        .value("HalfCircle", ArrayKind::HalfCircle);
    py::enum_<Axis>(m, "Axis").value("X", Axis::X).value("Y", Axis::Y);
    py::enum_<DbConvention>(m, "DbConvention")
        .value("Field10", DbConvention::Field10)
        .value("Field20", DbConvention::Field20);
    py::enum_<SearchDomain>(m, "SearchDomain")
        .value("Line", SearchDomain::Line)
        .value("Plane", SearchDomain::Plane);

    py::class_<ArrayConfig>(m, "ArrayConfig")
        .def(py::init([](ArrayKind kind, int n, double radius_m, double wavelength_m, double e0) {
                 ArrayConfig c{kind, n, radius_m, wavelength_m, e0};
                 c.validate();
                 return c;
             }),
             py::arg("kind") = ArrayKind::FullCircle, py::arg("n_elements") = 120, py::arg("radius_m") = 1.5,
             py::arg("wavelength_m") = 0.2, py::arg("source_amplitude") = 1.0)
        .def_readonly("kind", &ArrayConfig::kind)
        .def_readonly("n_elements", &ArrayConfig::n_elements)
        .def_readonly("radius_m", &ArrayConfig::radius_m)
        .def_readonly("wavelength_m", &ArrayConfig::wavelength_m)
        .def_readonly("source_amplitude", &ArrayConfig::source_amplitude)
        .def("chord_spacing_m", &ArrayConfig::chord_spacing_m)
        .def("chord_spacing_lambda", &ArrayConfig::chord_spacing_lambda);

    py::class_<ElementSet>(m, "ElementSet")
        .def_property_readonly("config", &ElementSet::config)
        .def_property_readonly("positions", &positions_array)
        .def_property_readonly("angles",
                               [](const ElementSet &e) { return std::vector<double>(e.angles().begin(), e.angles().end()); })
        .def("__len__", &ElementSet::size);

    m.def("build_full_circle", &build_full_circle, py::arg("config"));
    m.def("build_half_circle", &build_half_circle, py::arg("config"));
    m.def("build_array", &build_array, py::arg("config"));

    py::class_<ValidityRegion>(m, "ValidityRegion")
        .def_static("for_array", &ValidityRegion::for_array, py::arg("config"),
                    py::arg("margin_lambda") = default_margin_lambda)
        .def_readonly("margin_m", &ValidityRegion::margin_m)
        .def_readonly("radius_m", &ValidityRegion::radius_m);
    m.def("is_valid_point", &is_valid_point, py::arg("p"), py::arg("region"), py::arg("elements"));

    m.def(
        "field_at",
        [](Point2 p, const ElementSet &el, Point2 focal) { return field_at(p, el, FocalSpec{focal}); },
        py::arg("p"), py::arg("elements"), py::arg("focal"));

    m.def(
        "field_line",
        [](Axis axis, double start, double stop, double step, const ElementSet &el, Point2 focal,
           double margin_lambda, int threads) {
            const auto region = ValidityRegion::for_array(el.config(), margin_lambda);
            const auto samples = field_line(axis, start, stop, step, el, FocalSpec{focal}, region, threads);
            py::array_t<double> coord(samples.size()), mag(samples.size());
            py::array_t<bool> valid(samples.size());
            for (std::size_t i = 0; i < samples.size(); ++i)
            {
                coord.mutable_at(i) = axis == Axis::X ? samples[i].point.x : samples[i].point.y;
                mag.mutable_at(i) = std::abs(samples[i].value);
                valid.mutable_at(i) = samples[i].valid;
            }
            return py::make_tuple(coord, mag, valid);
        },
        py::arg("axis"), py::arg("start_m"), py::arg("stop_m"), py::arg("step_m"), py::arg("elements"),
        py::arg("focal"), py::arg("margin_lambda") = default_margin_lambda, py::arg("threads") = 1,
        "Returns (coordinates, |E|, valid) along the axis through the focal point.");

    m.def(
        "field_map",
        [](const ElementSet &el, Point2 focal, double step_m, double margin_lambda, int threads) {
            const auto region = ValidityRegion::for_array(el.config(), margin_lambda);
            const auto grid = GridSpec::covering_aperture(el.config().radius_m, step_m);
            const auto map = field_map(grid, el, FocalSpec{focal}, region, threads);
            const auto ny = static_cast<py::ssize_t>(grid.ny), nx = static_cast<py::ssize_t>(grid.nx);
            py::array_t<double> mag({ny, nx});
            auto v = mag.mutable_unchecked<2>();
            for (py::ssize_t iy = 0; iy < ny; ++iy)
                for (py::ssize_t ix = 0; ix < nx; ++ix)
                    v(iy, ix) = std::abs(map.at(static_cast<std::size_t>(ix), static_cast<std::size_t>(iy)).value);
            return py::make_tuple(grid.origin.x, grid.step_m, mag);
        },
        py::arg("elements"), py::arg("focal"), py::arg("step_m"), py::arg("margin_lambda") = default_margin_lambda,
        py::arg("threads") = 1, "Returns (origin, step, |E| as an ny x nx array); masked samples are 0.");

    py::class_<ScanOptions>(m, "ScanOptions")
        .def(py::init<>())
        .def_readwrite("margin_lambda", &ScanOptions::margin_lambda)
        .def_readwrite("search_step_lambda", &ScanOptions::search_step_lambda)
        .def_readwrite("sll_line_step_lambda", &ScanOptions::sll_line_step_lambda)
        .def_readwrite("plane_step_lambda", &ScanOptions::plane_step_lambda)
        .def_readwrite("db", &ScanOptions::db)
        .def_readwrite("gain_domain", &ScanOptions::gain_domain)
        .def_readwrite("sll_domain", &ScanOptions::sll_domain)
        .def_readwrite("threads", &ScanOptions::threads);

    py::class_<PeakResult>(m, "PeakResult")
        .def_readonly("location", &PeakResult::location)
        .def_readonly("field", &PeakResult::field);

    py::class_<GainScanRecord>(m, "GainScanRecord")
        .def_readonly("x_f_m", &GainScanRecord::x_f_m)
        .def_readonly("x_f_lambda", &GainScanRecord::x_f_lambda)
        .def_readonly("peak_field", &GainScanRecord::peak_field)
        .def_readonly("peak_location", &GainScanRecord::peak_location)
        .def_readonly("gain_db", &GainScanRecord::gain_db)
        .def_readonly("ok", &GainScanRecord::ok)
        .def_readonly("error", &GainScanRecord::error);
    m.def(
        "peak_gain_scan",
        [](const ElementSet &el, const std::vector<double> &xs, const ScanOptions &o) { return peak_gain_scan(el, xs, o); },
        py::arg("elements"), py::arg("focal_x_m"),
          py::arg("options") = ScanOptions{});

    py::class_<AxisWidth>(m, "AxisWidth")
        .def_readonly("width_lambda", &AxisWidth::width_lambda)
        .def_readonly("lower_m", &AxisWidth::lower_m)
        .def_readonly("upper_m", &AxisWidth::upper_m)
        .def_readonly("peak", &AxisWidth::peak)
        .def_readonly("resolvable", &AxisWidth::resolvable);
    m.def(
        "focal_width",
        [](const ElementSet &el, Point2 focal, Axis axis, const ScanOptions &o) {
            return focal_width(el, FocalSpec{focal}, axis, o);
        },
        py::arg("elements"), py::arg("focal"), py::arg("axis"), py::arg("options") = ScanOptions{});

    py::class_<WidthRecord>(m, "WidthRecord")
        .def_readonly("x_f_lambda", &WidthRecord::x_f_lambda)
        .def_readonly("x", &WidthRecord::x)
        .def_readonly("y", &WidthRecord::y)
        .def_readonly("resolvable", &WidthRecord::resolvable)
        .def_readonly("ok", &WidthRecord::ok);
    m.def(
        "width_scan",
        [](const ElementSet &el, const std::vector<double> &xs, const ScanOptions &o) { return width_scan(el, xs, o); },
        py::arg("elements"), py::arg("focal_x_m"), py::arg("options") = ScanOptions{});

    py::class_<SidelobeRecord>(m, "SidelobeRecord")
        .def_readonly("x_f_lambda", &SidelobeRecord::x_f_lambda)
        .def_readonly("main", &SidelobeRecord::main)
        .def_readonly("sidelobe", &SidelobeRecord::sidelobe)
        .def_readonly("sll_db", &SidelobeRecord::sll_db)
        .def_readonly("ok", &SidelobeRecord::ok);
    m.def(
        "sidelobe_scan",
        [](const ElementSet &el, const std::vector<double> &xs, const ScanOptions &o) { return sidelobe_scan(el, xs, o); },
        py::arg("elements"), py::arg("focal_x_m"),
          py::arg("options") = ScanOptions{});

    py::class_<FarFieldPattern>(m, "FarFieldPattern")
        .def_readonly("steering_deg", &FarFieldPattern::steering_deg)
        .def_readonly("phi_deg", &FarFieldPattern::phi_deg)
        .def_readonly("magnitude", &FarFieldPattern::magnitude)
        .def_readonly("peak_deg", &FarFieldPattern::peak_deg)
        .def_readonly("beamwidth_deg", &FarFieldPattern::beamwidth_deg);
    m.def("far_field_pattern", &far_field_pattern, py::arg("elements"), py::arg("steering_deg"),
          py::arg("angular_step_deg"), py::arg("threads") = 1);

    py::class_<NfFfRow>(m, "NfFfRow")
        .def_readonly("r_c_lambda", &NfFfRow::r_c_lambda)
        .def_readonly("nf_width_lambda", &NfFfRow::nf_width_lambda)
        .def_readonly("nf_resolvable", &NfFfRow::nf_resolvable)
        .def_readonly("ff_bw_deg", &NfFfRow::ff_bw_deg);
    m.def(
        "nf_ff_comparison",
        [](const std::vector<double> &radii, int n, double lambda, double step, const ScanOptions &o) {
            return nf_ff_comparison(radii, n, lambda, step, o);
        },
        py::arg("radii_m"), py::arg("n_elements"),
          py::arg("wavelength_m"), py::arg("angular_step_deg") = 0.01, py::arg("options") = ScanOptions{});

    m.def("j0", &nff::j0, py::arg("x"));
    m.def("bessel_field", &bessel_field, py::arg("delta_m"), py::arg("wavelength_m"));
    m.def("taylor_field_sum", &taylor_field_sum, py::arg("delta_m"), py::arg("elements"));
    m.def("amplitude_sum_at", &amplitude_sum_at, py::arg("p"), py::arg("elements"));
    m.def("arc_integral", &arc_integral, py::arg("p"), py::arg("radius_m"), py::arg("theta_lo"),
          py::arg("theta_hi"), py::arg("rel_tol") = 1e-10);

    py::class_<HalfCircleLimits>(m, "HalfCircleLimits")
        .def_readonly("center_field", &HalfCircleLimits::center_field)
        .def_readonly("edge_field", &HalfCircleLimits::edge_field)
        .def_readonly("ratio", &HalfCircleLimits::ratio)
        .def_readonly("ratio_db", &HalfCircleLimits::ratio_db);
    m.def("center_edge_ratio", &center_edge_ratio, py::arg("radius_m"));

    py::class_<ClosedFormRow>(m, "ClosedFormRow")
        .def_readonly("delta_lambda", &ClosedFormRow::delta_lambda)
        .def_readonly("eq1_norm", &ClosedFormRow::eq1_norm)
        .def_readonly("eq3_norm", &ClosedFormRow::eq3_norm)
        .def_readonly("eq4_norm", &ClosedFormRow::eq4_norm)
        .def_readonly("quadrature_norm", &ClosedFormRow::quadrature_norm);
    m.def(
        "closed_form_table",
        [](const ElementSet &el, const std::vector<double> &deltas, double margin_lambda, int threads) {
            return closed_form_table(el, deltas, margin_lambda, threads);
        },
        py::arg("elements"), py::arg("delta_lambda"), py::arg("margin_lambda") = default_margin_lambda,
        py::arg("threads") = 1);
}
