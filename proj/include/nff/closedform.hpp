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

#ifndef NFF_CLOSEDFORM_HPP
#define NFF_CLOSEDFORM_HPP

#include "nff/geometry.hpp"
#include "nff/quadrature.hpp"

#include <span>
#include <vector>

namespace nff
{

// |J0(2*pi*delta/lambda)|: the normalised large-N field of a full circle
// around its centre. Only meaningful while delta << r_c.
double bessel_field(double delta_m, double wavelength_m);

// Soft validity condition for bessel_field: delta <= r_c / 5.
bool bessel_regime_ok(double delta_m, double radius_m);

// Normalised magnitude of the Taylor-expanded element sum at offset delta
// along x from the centre of a full circle:
//   sum_n exp(-j*pi*delta^2/(lambda*r_c)) * exp(-j*2*pi*delta*cos(theta_n)/lambda)
//         / sqrt(r_c^2 + delta^2 - 2*r_c*delta*cos(theta_n))
// divided by its value at delta = 0. Throws std::invalid_argument for a
// half-circle element set.
double taylor_field_sum(double delta_m, const ElementSet &elements);

// Focal-point amplitude per unit E0: sum_n 1/|p - r_n|.
double amplitude_sum_at(Point2 p, const ElementSet &elements);

// Integral over theta in [theta_lo, theta_hi] of
//   1 / sqrt(x^2 + y^2 + r_c^2 - 2*r_c*(x cos(theta) + y sin(theta))),
// the continuous limit of amplitude_sum_at scaled by N / arc length.
// Throws std::domain_error when p lies on the arc or the requested relative
// tolerance cannot be met.
double arc_integral(Point2 p, double radius_m, double theta_lo, double theta_hi, double rel_tol = 1e-10);

// |(1/2pi) * integral_0^{2pi} exp(-j*2*pi*delta*cos(theta)/lambda) dtheta|
// evaluated by adaptive quadrature; equals |J0(2*pi*delta/lambda)|.
double phase_integral_norm(double delta_m, double wavelength_m, double rel_tol = 1e-12);

// Large-N half-circle fields at the centre and at the element-free edge
// (-r_c, 0), both per unit E0 and per element density N/pi.
struct HalfCircleLimits
{
    double center_field = 0.0; // pi / r_c
    double edge_field = 0.0;   // ln((sqrt2 + 1)/(sqrt2 - 1)) / r_c
    double ratio = 0.0;        // center / edge
    double ratio_db = 0.0;     // 10 log10(ratio)
};

HalfCircleLimits center_edge_ratio(double radius_m);

// One row of the normalised centre-line comparison.
struct ClosedFormRow
{
    double delta_lambda = 0.0;
    double eq1_norm = 0.0;       // direct element sum, masked points 0
    double eq3_norm = 0.0;       // taylor_field_sum
    double eq4_norm = 0.0;       // bessel_field
    double quadrature_norm = 0.0; // phase_integral_norm
};

// Rows for offsets delta_lambda[i] (in wavelengths) along +x from the
// centre of a full circle focused at its centre.
std::vector<ClosedFormRow> closed_form_table(const ElementSet &elements, std::span<const double> delta_lambda,
                                             double margin_lambda = default_margin_lambda, int threads = 1);

} // namespace nff

#endif
