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

#include "nff/validation.hpp"

#include "nff/analysis.hpp"
#include "nff/bessel.hpp"
#include "nff/closedform.hpp"
#include "nff/field.hpp"
#include "nff/quadrature.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace nff
{

namespace
{

ValidationCheck check(std::string name, double measured, double expected, double tolerance, std::string detail = {})
{
    return {std::move(name), measured, expected, tolerance, std::abs(measured - expected) <= tolerance,
            std::move(detail)};
}

} // namespace

std::vector<ValidationCheck> run_validation(int threads)
{
    std::vector<ValidationCheck> out;
    constexpr double lambda = 0.2;
    ScanOptions opts;
    opts.threads = threads;

    {
        const auto el = build_full_circle({ArrayKind::FullCircle, 120, 1.5, lambda, 1.0});
        const double e = std::abs(field_at({0.0, 0.0}, el, FocalSpec{{0.0, 0.0}}));
        out.push_back(check("center_field_vpm", e, 80.0, 80.0 * 1e-9, "N*E0/r_c, N=120, r_c=1.5 m"));
    }
    {
        const auto el = build_full_circle({ArrayKind::FullCircle, 120, 7.5 * lambda, lambda, 1.0});
        const FocalSpec centre{{0.0, 0.0}};
        const auto wx = focal_width(el, centre, Axis::X, opts);
        const auto wy = focal_width(el, centre, Axis::Y, opts);
        out.push_back(check("focal_width_x_lambda", wx.width_lambda, 0.36, 0.02, "N=120, r_c=7.5 lambda"));
        out.push_back(check("focal_width_y_lambda", wy.width_lambda, 0.36, 0.02, "N=120, r_c=7.5 lambda"));

        double dev = 0.0;
        const double e0 = std::abs(field_at({0.0, 0.0}, el, centre));
        for (int i = 0; i <= 300; ++i)
        {
            const double d = i * 0.01 * lambda;
            dev = std::max(dev, std::abs(std::abs(field_at({d, 0.0}, el, centre)) / e0 - bessel_field(d, lambda)));
        }
        out.push_back(check("bessel_max_deviation", dev, 0.0, 0.05, "normalised |E| vs |J0|, delta in [0, 3] lambda"));

        const auto sll = sidelobe_at(el, centre, opts);
        out.push_back(check("center_sll_db", sll.sidelobe ? sll.sll_db : std::nan(""), 7.9, 0.5,
                            "20 log10 convention, line search"));
    }
    {
        const auto el = build_half_circle({ArrayKind::HalfCircle, 10000, 1.0, lambda, 1.0});
        const double ratio = amplitude_sum_at({0.0, 0.0}, el) / amplitude_sum_at({-1.0, 0.0}, el);
        const auto lim = center_edge_ratio(1.0);
        out.push_back(check("half_circle_ratio", ratio, lim.ratio, 0.005 * lim.ratio, "N=1e4 element sums"));
        out.push_back(check("half_circle_ratio_db", 10.0 * std::log10(ratio), 2.51, 0.01, "10 log10 convention"));
    }
    {
        double dev = 0.0;
        for (int i = 0; i < 50; ++i)
        {
            const double x = 20.0 * i / 49.0;
            const auto r = integrate<double>([x](double t) { return std::cos(x * std::sin(t)); }, 0.0, pi,
                                             QuadratureOptions{1e-13, 1e-15, 20000});
            dev = std::max(dev, std::abs(j0(x) - r.value / pi));
        }
        out.push_back(check("j0_vs_integral", dev, 0.0, 1e-9, "50 points on [0, 20]"));
    }
    {
        const double half = arc_integral({0.0, 0.0}, 1.0, -pi / 2.0, pi / 2.0);
        const double edge = arc_integral({-1.0, 0.0}, 1.0, -pi / 2.0, pi / 2.0);
        out.push_back(check("arc_integral_center", half, pi, 1e-9));
        out.push_back(check("arc_integral_edge", edge, std::log((std::sqrt(2.0) + 1.0) / (std::sqrt(2.0) - 1.0)),
                            1e-9));
    }
    {
        const auto el = build_full_circle({ArrayKind::FullCircle, 120, 1.5, lambda, 1.0});
        std::vector<double> xs;
        for (int i = -14; i <= 14; ++i)
            xs.push_back(i * 0.5 * lambda);
        const auto recs = peak_gain_scan(el, xs, opts);
        const auto it = std::min_element(recs.begin(), recs.end(),
                                         [](const auto &a, const auto &b) { return a.gain_db < b.gain_db; });
        out.push_back(check("gain_minimum_x_f_lambda", it->x_f_lambda, 0.0, 1e-9, "full circle r_c=1.5 m"));
    }
    return out;
}

std::string render_validation_report(const std::vector<ValidationCheck> &checks)
{
    std::string out;
    int failed = 0;
    for (const auto &c : checks)
    {
        failed += c.passed ? 0 : 1;
        out += fmt::format("[{}] {:<26} measured={:.10g} expected={:.10g} tol={:.3g}{}{}\n", c.passed ? "PASS" : "FAIL",
                           c.name, c.measured, c.expected, c.tolerance, c.detail.empty() ? "" : "  # ", c.detail);
    }
    out += fmt::format("{} checks, {} failed\n", checks.size(), failed);
    return out;
}

} // namespace nff
