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

#ifndef NFF_FIELD_HPP
#define NFF_FIELD_HPP

#include "nff/geometry.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace nff
{

using Complex = std::complex<double>;

struct FocalSpec
{
    Point2 focal;
};

// Invalid samples carry value exactly zero.
struct FieldSample
{
    Point2 point;
    Complex value{0.0, 0.0};
    bool valid = false;
};

// Phase-conjugated field of the array at p:
//   E0 * sum_n exp(-j*2*pi*(|p - r_n| - |r_f - r_n|)/lambda) / |p - r_n|
// with lambda and E0 taken from the element configuration. No masking.
// Throws std::domain_error if p coincides with an element.
Complex field_at(Point2 p, const ElementSet &elements, const FocalSpec &focal);

// Same sum with explicit wavelength and amplitude.
Complex field_at(Point2 p, const ElementSet &elements, const FocalSpec &focal, double wavelength_m,
                 double source_amplitude);

// |field_at| without the complex result; masked points return 0.
double masked_magnitude(Point2 p, const ElementSet &elements, const FocalSpec &focal,
                        const ValidityRegion &region);

enum class Axis
{
    X,
    Y
};

// Samples t = start + i*step for i = 0..round((stop - start)/step).
std::vector<double> linspace_step(double start, double stop, double step);

// Samples along the line through the focal point parallel to `axis`:
// (t, y_f) for X and (x_f, t) for Y, t in [start, stop].
std::vector<FieldSample> field_line(Axis axis, double start_m, double stop_m, double step_m,
                                    const ElementSet &elements, const FocalSpec &focal,
                                    const ValidityRegion &region, int threads = 1);

struct GridSpec
{
    Point2 origin; // lower-left sample
    double step_m = 0.0;
    std::size_t nx = 0;
    std::size_t ny = 0;

    Point2 point(std::size_t ix, std::size_t iy) const
    {
        return {origin.x + static_cast<double>(ix) * step_m, origin.y + static_cast<double>(iy) * step_m};
    }

    // Square grid centred on the origin spanning [-radius, radius] in both axes.
    static GridSpec covering_aperture(double radius_m, double step_m);
};

struct MapPeak
{
    std::size_t index = 0;
    Point2 location;
    double magnitude = 0.0;
};

struct FieldMap
{
    GridSpec grid;
    std::vector<FieldSample> samples; // row-major: index = iy * nx + ix
    ArrayConfig config;
    FocalSpec focal;
    std::optional<MapPeak> peak; // empty when no sample is valid

    const FieldSample &at(std::size_t ix, std::size_t iy) const { return samples[iy * grid.nx + ix]; }
};

FieldMap field_map(const GridSpec &grid, const ElementSet &elements, const FocalSpec &focal,
                   const ValidityRegion &region, int threads = 1);

// Interior local maxima of |E| on the map: samples whose 8 neighbours are
// all valid and none exceeds them. Sorted by decreasing magnitude, ties by
// row-major index.
std::vector<MapPeak> local_maxima(const FieldMap &map);

} // namespace nff

#endif
