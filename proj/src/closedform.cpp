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

#include "nff/closedform.hpp"

#include "nff/bessel.hpp"
#include "nff/field.hpp"
#include "nff/parallel.hpp"

#include <complex>
#include <stdexcept>
#include <string>

namespace nff
{

double bessel_field(double delta_m, double wavelength_m)
{
    return std::abs(j0(two_pi * delta_m / wavelength_m));
}

bool bessel_regime_ok(double delta_m, double radius_m)
{
    return std::abs(delta_m) <= radius_m / 5.0;
}

namespace
{

std::complex<double> taylor_sum_raw(double delta, const ElementSet &elements)
{
    const auto &cfg = elements.config();
    const double rc = cfg.radius_m;
    const double lambda = cfg.wavelength_m;
    const std::complex<double> common = std::polar(1.0, -pi * delta * delta / (lambda * rc));
    std::complex<double> sum{0.0, 0.0};
    for (double theta : elements.angles())
    {
        const double c = std::cos(theta);
        const double amp = 1.0 / std::sqrt(rc * rc + delta * delta - 2.0 * rc * delta * c);
        sum += std::polar(amp, -two_pi * delta * c / lambda);
    }
    return common * sum;
}

} // namespace

double taylor_field_sum(double delta_m, const ElementSet &elements)
{
    if (elements.config().kind != ArrayKind::FullCircle)
        throw std::invalid_argument("taylor_field_sum: needs a full-circle array");
    return std::abs(taylor_sum_raw(delta_m, elements)) / std::abs(taylor_sum_raw(0.0, elements));
}

double amplitude_sum_at(Point2 p, const ElementSet &elements)
{
    const auto positions = elements.positions();
    double sum = 0.0;
    for (std::size_t n = 0; n < positions.size(); ++n)
    {
        const double d = distance(p, positions[n]);
        if (d == 0.0)
            throw std::domain_error("amplitude_sum_at: point coincides with element " + std::to_string(n + 1));
        sum += 1.0 / d;
    }
    return sum;
}

double arc_integral(Point2 p, double radius_m, double theta_lo, double theta_hi, double rel_tol)
{
    if (!(theta_hi > theta_lo))
        throw std::invalid_argument("arc_integral: empty angular interval");
    const double r2 = p.x * p.x + p.y * p.y + radius_m * radius_m;
    auto integrand = [&](double theta) {
        return 1.0 / std::sqrt(r2 - 2.0 * radius_m * (p.x * std::cos(theta) + p.y * std::sin(theta)));
    };

    // Distance from p to the arc; the integrand peaks where the arc passes
    // closest to p, so split there.
    double closest = theta_lo;
    double dmin = distance(p, {radius_m * std::cos(theta_lo), radius_m * std::sin(theta_lo)});
    const double dhi = distance(p, {radius_m * std::cos(theta_hi), radius_m * std::sin(theta_hi)});
    if (dhi < dmin)
    {
        dmin = dhi;
        closest = theta_hi;
    }
    if (p.norm() > 0.0)
    {
        double phi = std::atan2(p.y, p.x);
        while (phi < theta_lo)
            phi += two_pi;
        while (phi - two_pi >= theta_lo)
            phi -= two_pi;
        if (phi <= theta_hi)
        {
            const double d = std::abs(radius_m - p.norm());
            if (d < dmin)
            {
                dmin = d;
                closest = phi;
            }
        }
    }
    if (dmin <= 1e-12 * radius_m)
        throw std::domain_error("arc_integral: point lies on the arc");

    QuadratureOptions opts;
    opts.rel_tol = rel_tol;
    double total = 0.0;
    double err = 0.0;
    bool ok = true;
    auto piece = [&](double a, double b) {
        if (b <= a)
            return;
        const auto r = integrate<double>(integrand, a, b, opts);
        total += r.value;
        err += r.error_estimate;
        ok = ok && r.converged;
    };
    piece(theta_lo, closest);
    piece(closest, theta_hi);
    if (!ok || err > rel_tol * std::abs(total))
        throw std::domain_error("arc_integral: tolerance not met (point too close to the arc)");
    return total;
}

double phase_integral_norm(double delta_m, double wavelength_m, double rel_tol)
{
    const double kd = two_pi * delta_m / wavelength_m;
    auto integrand = [kd](double theta) { return std::polar(1.0, -kd * std::cos(theta)); };
    QuadratureOptions opts;
    opts.rel_tol = rel_tol;
    opts.abs_tol = 1e-14;
    const auto r = integrate<std::complex<double>>(integrand, 0.0, two_pi, opts);
    return std::abs(r.value) / two_pi;
}

HalfCircleLimits center_edge_ratio(double radius_m)
{
    if (!(radius_m > 0.0))
        throw std::invalid_argument("radius_m: must be positive");
    const double sqrt2 = std::sqrt(2.0);
    HalfCircleLimits out;
    out.center_field = pi / radius_m;
    out.edge_field = std::log((sqrt2 + 1.0) / (sqrt2 - 1.0)) / radius_m;
    out.ratio = out.center_field / out.edge_field;
    out.ratio_db = 10.0 * std::log10(out.ratio);
    return out;
}

std::vector<ClosedFormRow> closed_form_table(const ElementSet &elements, std::span<const double> delta_lambda,
                                             double margin_lambda, int threads)
{
    if (elements.config().kind != ArrayKind::FullCircle)
        throw std::invalid_argument("closed_form_table: needs a full-circle array");
    const auto &cfg = elements.config();
    const double lambda = cfg.wavelength_m;
    const FocalSpec centre{{0.0, 0.0}};
    const auto region = ValidityRegion::for_array(cfg, margin_lambda);
    const double e_centre = std::abs(field_at({0.0, 0.0}, elements, centre));

    std::vector<ClosedFormRow> rows(delta_lambda.size());
    parallel_for(rows.size(), threads, [&](std::size_t i) {
        const double delta = delta_lambda[i] * lambda;
        ClosedFormRow row;
        row.delta_lambda = delta_lambda[i];
        row.eq1_norm = masked_magnitude({delta, 0.0}, elements, centre, region) / e_centre;
        row.eq3_norm = taylor_field_sum(delta, elements);
        row.eq4_norm = bessel_field(delta, lambda);
        row.quadrature_norm = phase_integral_norm(delta, lambda);
        rows[i] = row;
    });
    return rows;
}

} // namespace nff
