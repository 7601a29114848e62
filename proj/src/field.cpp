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

#include "nff/field.hpp"

#include "nff/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nff
{

Complex field_at(Point2 p, const ElementSet &elements, const FocalSpec &focal, double wavelength_m,
                 double source_amplitude)
{
    const double k = two_pi / wavelength_m;
    const auto positions = elements.positions();
    Complex sum{0.0, 0.0};
    for (std::size_t n = 0; n < positions.size(); ++n)
    {
        const double d = distance(p, positions[n]);
        if (d == 0.0)
            throw std::domain_error("field_at: observation point coincides with element " + std::to_string(n + 1));
        const double df = distance(focal.focal, positions[n]);
        sum += std::polar(1.0 / d, -k * (d - df));
    }
    return source_amplitude * sum;
}

Complex field_at(Point2 p, const ElementSet &elements, const FocalSpec &focal)
{
    const auto &cfg = elements.config();
    return field_at(p, elements, focal, cfg.wavelength_m, cfg.source_amplitude);
}

double masked_magnitude(Point2 p, const ElementSet &elements, const FocalSpec &focal, const ValidityRegion &region)
{
    if (!is_valid_point(p, region, elements))
        return 0.0;
    return std::abs(field_at(p, elements, focal));
}

std::vector<double> linspace_step(double start, double stop, double step)
{
    if (!(step > 0.0))
        throw std::invalid_argument("step: must be positive");
    if (!(start < stop) && start != stop)
        throw std::invalid_argument("range: start must not exceed stop");
    const auto count = static_cast<std::size_t>(std::llround((stop - start) / step)) + 1;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = start + static_cast<double>(i) * step;
    return out;
}

std::vector<FieldSample> field_line(Axis axis, double start_m, double stop_m, double step_m,
                                    const ElementSet &elements, const FocalSpec &focal,
                                    const ValidityRegion &region, int threads)
{
    if (!(start_m < stop_m))
        throw std::invalid_argument("field_line: empty range");
    const auto coords = linspace_step(start_m, stop_m, step_m);
    std::vector<FieldSample> out(coords.size());
    parallel_for(coords.size(), threads, [&](std::size_t i) {
        const Point2 p = axis == Axis::X ? Point2{coords[i], focal.focal.y} : Point2{focal.focal.x, coords[i]};
        FieldSample s{p, {0.0, 0.0}, is_valid_point(p, region, elements)};
        if (s.valid)
            s.value = field_at(p, elements, focal);
        out[i] = s;
    });
    return out;
}

GridSpec GridSpec::covering_aperture(double radius_m, double step_m)
{
    if (!(step_m > 0.0))
        throw std::invalid_argument("grid step: must be positive");
    const auto half = static_cast<std::size_t>(std::floor(radius_m / step_m + 1e-9));
    const double extent = static_cast<double>(half) * step_m;
    return {{-extent, -extent}, step_m, 2 * half + 1, 2 * half + 1};
}

FieldMap field_map(const GridSpec &grid, const ElementSet &elements, const FocalSpec &focal,
                   const ValidityRegion &region, int threads)
{
    if (grid.nx == 0 || grid.ny == 0)
        throw std::invalid_argument("field_map: degenerate grid (nx or ny is zero)");
    if (!(grid.step_m > 0.0))
        throw std::invalid_argument("field_map: grid step must be positive");

    FieldMap map{grid, std::vector<FieldSample>(grid.nx * grid.ny), elements.config(), focal, std::nullopt};
    parallel_for(grid.ny, threads, [&](std::size_t iy) {
        for (std::size_t ix = 0; ix < grid.nx; ++ix)
        {
            const Point2 p = grid.point(ix, iy);
            FieldSample s{p, {0.0, 0.0}, is_valid_point(p, region, elements)};
            if (s.valid)
                s.value = field_at(p, elements, focal);
            map.samples[iy * grid.nx + ix] = s;
        }
    });

    for (std::size_t i = 0; i < map.samples.size(); ++i)
    {
        const auto &s = map.samples[i];
        if (!s.valid)
            continue;
        const double mag = std::abs(s.value);
        if (!map.peak || mag > map.peak->magnitude)
            map.peak = MapPeak{i, s.point, mag};
    }
    return map;
}

std::vector<MapPeak> local_maxima(const FieldMap &map)
{
    std::vector<MapPeak> out;
    const auto nx = map.grid.nx, ny = map.grid.ny;
    if (nx < 3 || ny < 3)
        return out;
    for (std::size_t iy = 1; iy + 1 < ny; ++iy)
    {
        for (std::size_t ix = 1; ix + 1 < nx; ++ix)
        {
            const auto &centre = map.at(ix, iy);
            if (!centre.valid)
                continue;
            const double mag = std::abs(centre.value);
            bool is_max = true;
            for (int dy = -1; dy <= 1 && is_max; ++dy)
            {
                for (int dx = -1; dx <= 1; ++dx)
                {
                    const auto &nb = map.at(ix + dx, iy + dy);
                    if (!nb.valid || std::abs(nb.value) > mag)
                    {
                        is_max = false;
                        break;
                    }
                }
            }
            if (is_max)
                out.push_back({iy * nx + ix, centre.point, mag});
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const MapPeak &a, const MapPeak &b) { return a.magnitude > b.magnitude; });
    return out;
}

} // namespace nff
