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

#ifndef NFF_GEOMETRY_HPP
#define NFF_GEOMETRY_HPP

#include <cmath>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

namespace nff
{

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Default exclusion half-width around the element ring, in wavelengths.
inline constexpr double default_margin_lambda = 0.2;

struct Point2
{
    double x = 0.0;
    double y = 0.0;

    double norm() const { return std::hypot(x, y); }

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Point2 a, Point2 b) = default;
};

inline double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Rotation about the origin by `angle` radians.
inline Point2 rotate(Point2 p, double angle)
{
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

enum class ArrayKind
{
    FullCircle,
    HalfCircle
};

std::string_view to_string(ArrayKind kind);
ArrayKind parse_array_kind(std::string_view text);

// Uniform circular array description. All lengths in meters.
struct ArrayConfig
{
    ArrayKind kind = ArrayKind::FullCircle;
    int n_elements = 120;
    double radius_m = 1.5;
    double wavelength_m = 0.2;
    double source_amplitude = 1.0; // E0 in V/m

    // Throws std::invalid_argument naming the offending field.
    void validate() const;

    // Chord between neighbouring elements. For the half circle this is the
    // chord subtending pi/N.
    double chord_spacing_m() const;
    double chord_spacing_lambda() const { return chord_spacing_m() / wavelength_m; }

    double wavenumber() const { return two_pi / wavelength_m; }
};

// Ordered element positions produced from an ArrayConfig. Immutable.
class ElementSet
{
  public:
    ElementSet(ArrayConfig config, std::vector<double> angles);

    const ArrayConfig &config() const { return config_; }
    std::span<const Point2> positions() const { return positions_; }
    std::span<const double> angles() const { return angles_; }
    std::size_t size() const { return positions_.size(); }

    // Angular interval [lo, hi] actually populated by elements. Full circles
    // report [0, 2*pi].
    double arc_lo() const;
    double arc_hi() const;

  private:
    ArrayConfig config_;
    std::vector<double> angles_;
    std::vector<Point2> positions_;
};

// Element n = 1..N sits at angle 2*pi*(n+1)/N for even N and 2*pi*n/N for odd N.
ElementSet build_full_circle(const ArrayConfig &config);

// Midpoint-rule angles -pi/2 + (n - 1/2)*pi/N over the +x half plane.
ElementSet build_half_circle(const ArrayConfig &config);

// Dispatches on config.kind.
ElementSet build_array(const ArrayConfig &config);

// (D/lambda)^(1/3) * D/2 expressed in wavelengths, for an antenna of size D.
double reactive_boundary_lambda(double antenna_size_lambda = 0.5);

struct ValidityRegion
{
    double margin_m = 0.0;
    double radius_m = 0.0; // aperture radius

    static ValidityRegion for_array(const ArrayConfig &config,
                                    double margin_lambda = default_margin_lambda);
};

// Distance from p to the populated part of the element ring (a full circle
// or the closed half-circle arc).
double distance_to_populated_arc(Point2 p, const ElementSet &elements);

// A point is valid when it lies inside the aperture and farther than the
// margin from the populated arc. Total function.
bool is_valid_point(Point2 p, const ValidityRegion &region, const ElementSet &elements);

} // namespace nff

#endif
