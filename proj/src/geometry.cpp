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

#include "nff/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nff
{

std::string_view to_string(ArrayKind kind)
{
    return kind == ArrayKind::FullCircle ? "full" : "half";
}

ArrayKind parse_array_kind(std::string_view text)
{
    if (text == "full" || text == "full-circle" || text == "FullCircle")
        return ArrayKind::FullCircle;
    if (text == "half" || text == "half-circle" || text == "HalfCircle")
        return ArrayKind::HalfCircle;
    throw std::invalid_argument("kind: expected 'full' or 'half', got '" + std::string(text) + "'");
}

void ArrayConfig::validate() const
{
    if (n_elements < 1)
        throw std::invalid_argument("n_elements: must be >= 1, got " + std::to_string(n_elements));
    if (!(radius_m > 0.0) || !std::isfinite(radius_m))
        throw std::invalid_argument("radius_m: must be positive and finite");
    if (!(wavelength_m > 0.0) || !std::isfinite(wavelength_m))
        throw std::invalid_argument("wavelength_m: must be positive and finite");
    if (!std::isfinite(source_amplitude))
        throw std::invalid_argument("source_amplitude: must be finite");
}

double ArrayConfig::chord_spacing_m() const
{
    const double span = kind == ArrayKind::FullCircle ? two_pi : pi;
    return 2.0 * radius_m * std::sin(span / (2.0 * n_elements));
}

ElementSet::ElementSet(ArrayConfig config, std::vector<double> angles)
    : config_(config), angles_(std::move(angles))
{
    positions_.reserve(angles_.size());
    for (double a : angles_)
        positions_.push_back({config_.radius_m * std::cos(a), config_.radius_m * std::sin(a)});
}

double ElementSet::arc_lo() const
{
    return config_.kind == ArrayKind::FullCircle ? 0.0 : -pi / 2.0;
}

double ElementSet::arc_hi() const
{
    return config_.kind == ArrayKind::FullCircle ? two_pi : pi / 2.0;
}

ElementSet build_full_circle(const ArrayConfig &config)
{
    config.validate();
    if (config.kind != ArrayKind::FullCircle)
        throw std::invalid_argument("kind: build_full_circle needs a full-circle config");

    const int n_el = config.n_elements;
    const bool even = n_el % 2 == 0;
    std::vector<double> angles;
    angles.reserve(n_el);
    for (int n = 1; n <= n_el; ++n)
        angles.push_back(two_pi * (even ? n + 1 : n) / n_el);
    return {config, std::move(angles)};
}

ElementSet build_half_circle(const ArrayConfig &config)
{
    config.validate();
    if (config.kind != ArrayKind::HalfCircle)
        throw std::invalid_argument("kind: build_half_circle needs a half-circle config");

    const int n_el = config.n_elements;
    std::vector<double> angles;
    angles.reserve(n_el);
    for (int n = 1; n <= n_el; ++n)
        angles.push_back(-pi / 2.0 + (n - 0.5) * pi / n_el);
    return {config, std::move(angles)};
}

ElementSet build_array(const ArrayConfig &config)
{
    return config.kind == ArrayKind::FullCircle ? build_full_circle(config) : build_half_circle(config);
}

double reactive_boundary_lambda(double antenna_size_lambda)
{
    return std::cbrt(antenna_size_lambda) * antenna_size_lambda / 2.0;
}

ValidityRegion ValidityRegion::for_array(const ArrayConfig &config, double margin_lambda)
{
    if (!(margin_lambda > 0.0))
        throw std::invalid_argument("margin_lambda: must be positive");
    return {margin_lambda * config.wavelength_m, config.radius_m};
}

double distance_to_populated_arc(Point2 p, const ElementSet &elements)
{
    const double rc = elements.config().radius_m;
    const double r = p.norm();
    if (elements.config().kind == ArrayKind::FullCircle)
        return std::abs(rc - r);

    // Closed arc [-pi/2, pi/2]: the half plane x >= 0.
    if (r > 0.0 && p.x >= 0.0)
        return std::abs(rc - r);
    return std::min(distance(p, {0.0, rc}), distance(p, {0.0, -rc}));
}

bool is_valid_point(Point2 p, const ValidityRegion &region, const ElementSet &elements)
{
    const double r = p.norm();
    const double rc = region.radius_m;
    if (r > rc * (1.0 + 1e-12))
        return false;
    // Inclusive inner boundary; the slack absorbs rounding in x = i * step * lambda.
    if (r <= rc - region.margin_m + 1e-12 * rc)
        return true;
    return distance_to_populated_arc(p, elements) > region.margin_m;
}

} // namespace nff
