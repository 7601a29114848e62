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

#include "nff/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nff
{

std::string_view to_string(DbConvention conv)
{
    return conv == DbConvention::Field10 ? "field10" : "field20";
}

DbConvention parse_db_convention(std::string_view text)
{
    if (text == "field10")
        return DbConvention::Field10;
    if (text == "field20")
        return DbConvention::Field20;
    throw std::invalid_argument("db_convention: expected 'field10' or 'field20', got '" + std::string(text) + "'");
}

double to_db(double field_magnitude, DbConvention conv)
{
    const double scale = conv == DbConvention::Field10 ? 10.0 : 20.0;
    return scale * std::log10(field_magnitude);
}

std::string_view to_string(SearchDomain domain)
{
    return domain == SearchDomain::Line ? "line" : "plane";
}

SearchDomain parse_search_domain(std::string_view text)
{
    if (text == "line")
        return SearchDomain::Line;
    if (text == "plane")
        return SearchDomain::Plane;
    throw std::invalid_argument("search domain: expected 'line' or 'plane', got '" + std::string(text) + "'");
}

void ScanOptions::validate() const
{
    if (!(margin_lambda > 0.0))
        throw std::invalid_argument("margin_lambda: must be positive");
    if (!(search_step_lambda > 0.0) || search_step_lambda > 1.0 / 50.0 + 1e-15)
        throw std::invalid_argument("search_step_lambda: must be in (0, 1/50]");
    if (!(peak_tol_lambda > 0.0) || !(crossing_tol_lambda > 0.0))
        throw std::invalid_argument("peak_tol_lambda/crossing_tol_lambda: must be positive");
    if (!(sll_line_step_lambda > 0.0) || !(plane_step_lambda > 0.0))
        throw std::invalid_argument("sll_line_step_lambda/plane_step_lambda: must be positive");
}

namespace
{

constexpr double inv_sqrt2 = 0.70710678118654752440;

Point2 on_line(Point2 base, Axis axis, double t)
{
    return axis == Axis::X ? Point2{t, base.y} : Point2{base.x, t};
}

double along(Point2 p, Axis axis) { return axis == Axis::X ? p.x : p.y; }

struct LineProbe
{
    const ElementSet &elements;
    const FocalSpec &focal;
    const ValidityRegion &region;
    Axis axis;

    bool valid(double t) const { return is_valid_point(on_line(focal.focal, axis, t), region, elements); }
    double operator()(double t) const { return masked_magnitude(on_line(focal.focal, axis, t), elements, focal, region); }
};

// Maximiser of a unimodal f on [lo, hi].
template <typename F>
std::pair<double, double> golden_max(const F &f, double lo, double hi, double tol)
{
    constexpr double inv_phi = 0.61803398874989484820;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol)
    {
        if (fc >= fd)
        {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        }
        else
        {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double t = 0.5 * (a + b);
    return {t, f(t)};
}

// Local maximum of probe near t, bracketed by +-step and clipped to the valid
// part of the line.
std::pair<double, double> refine_line_max(const LineProbe &probe, double t, double step, double tol)
{
    const double here = probe(t);
    const double lo = probe.valid(t - step) ? t - step : t;
    const double hi = probe.valid(t + step) ? t + step : t;
    if (!(hi > lo))
        return {t, here};
    const auto [tg, vg] = golden_max(probe, lo, hi, tol);
    return vg > here ? std::pair{tg, vg} : std::pair{t, here};
}

// Bisection for the crossing of level between `above` (probe >= level) and
// `below` (probe < level).
double bisect_crossing(const LineProbe &probe, double above, double below, double level, double tol)
{
    while (std::abs(below - above) > tol)
    {
        const double mid = 0.5 * (above + below);
        if (probe(mid) >= level)
            above = mid;
        else
            below = mid;
    }
    return 0.5 * (above + below);
}

bool better_candidate(const PeakResult &cand, const std::optional<PeakResult> &best, Point2 main)
{
    if (!best)
        return true;
    const double scale = std::max(cand.field, best->field);
    if (std::abs(cand.field - best->field) <= 1e-12 * scale)
        return distance(cand.location, main) < distance(best->location, main);
    return cand.field > best->field;
}

} // namespace

PeakResult focal_lobe_peak_line(const ElementSet &elements, const FocalSpec &focal, Axis axis,
                                const ValidityRegion &region, const ScanOptions &opts)
{
    if (!is_valid_point(focal.focal, region, elements))
        throw std::domain_error("focal point lies in the masked region");
    const double lambda = elements.config().wavelength_m;
    const double step = opts.search_step_lambda * lambda;
    const LineProbe probe{elements, focal, region, axis};

    double t = along(focal.focal, axis);
    double v = probe(t);
    const auto max_moves = static_cast<int>(4.0 * region.radius_m / step) + 4;
    for (int i = 0; i < max_moves; ++i)
    {
        const double vl = probe(t - step);
        const double vr = probe(t + step);
        if (vr > v && vr >= vl)
        {
            t += step;
            v = vr;
        }
        else if (vl > v)
        {
            t -= step;
            v = vl;
        }
        else
            break;
    }
    const auto [tr, vr] = refine_line_max(probe, t, step, opts.peak_tol_lambda * lambda);
    return {on_line(focal.focal, axis, tr), vr};
}

PeakResult focal_lobe_peak_plane(const ElementSet &elements, const FocalSpec &focal,
                                 const ValidityRegion &region, const ScanOptions &opts)
{
    if (!is_valid_point(focal.focal, region, elements))
        throw std::domain_error("focal point lies in the masked region");
    const double lambda = elements.config().wavelength_m;
    double step = opts.search_step_lambda * lambda;
    const double tol = opts.peak_tol_lambda * lambda;

    Point2 p = focal.focal;
    double v = masked_magnitude(p, elements, focal, region);
    const auto max_moves = static_cast<int>(8.0 * region.radius_m / step) + 8;
    int moves = 0;
    while (step >= tol && moves < max_moves)
    {
        Point2 best = p;
        double best_v = v;
        for (int dy = -1; dy <= 1; ++dy)
        {
            for (int dx = -1; dx <= 1; ++dx)
            {
                if (dx == 0 && dy == 0)
                    continue;
                const Point2 q{p.x + dx * step, p.y + dy * step};
                const double vq = masked_magnitude(q, elements, focal, region);
                if (vq > best_v)
                {
                    best = q;
                    best_v = vq;
                }
            }
        }
        if (best_v > v)
        {
            p = best;
            v = best_v;
            ++moves;
        }
        else
            step *= 0.5;
    }
    return {p, v};
}

std::vector<GainScanRecord> peak_gain_scan(const ElementSet &elements, std::span<const double> focal_x_m,
                                           const ScanOptions &opts)
{
    opts.validate();
    const auto &cfg = elements.config();
    const auto region = ValidityRegion::for_array(cfg, opts.margin_lambda);
    std::vector<GainScanRecord> out(focal_x_m.size());
    parallel_for(out.size(), opts.threads, [&](std::size_t i) {
        GainScanRecord rec;
        rec.x_f_m = focal_x_m[i];
        rec.x_f_lambda = focal_x_m[i] / cfg.wavelength_m;
        const FocalSpec focal{{focal_x_m[i], 0.0}};
        try
        {
            const PeakResult peak = opts.gain_domain == SearchDomain::Line
                                        ? focal_lobe_peak_line(elements, focal, Axis::X, region, opts)
                                        : focal_lobe_peak_plane(elements, focal, region, opts);
            rec.peak_field = peak.field;
            rec.peak_location = peak.location;
            rec.gain_db = to_db(peak.field, opts.db);
            rec.ok = true;
        }
        catch (const std::domain_error &e)
        {
            rec.error = e.what();
        }
        out[i] = rec;
    });
    return out;
}

AxisWidth focal_width(const ElementSet &elements, const FocalSpec &focal, Axis axis, const ScanOptions &opts)
{
    opts.validate();
    const auto &cfg = elements.config();
    const double lambda = cfg.wavelength_m;
    const auto region = ValidityRegion::for_array(cfg, opts.margin_lambda);
    const LineProbe probe{elements, focal, region, axis};
    const double step = opts.search_step_lambda * lambda;
    const double tol = opts.crossing_tol_lambda * lambda;

    AxisWidth out;
    out.peak = focal_lobe_peak_line(elements, focal, axis, region, opts);
    const double level = out.peak.field * inv_sqrt2;
    const double tp = along(out.peak.location, axis);
    const auto max_steps = static_cast<int>(2.0 * region.radius_m / step) + 2;

    auto walk = [&](double dir, double &crossing) {
        double last = tp;
        for (int i = 1; i <= max_steps; ++i)
        {
            const double t = tp + dir * i * step;
            if (!probe.valid(t))
                return false;
            if (probe(t) < level)
            {
                crossing = bisect_crossing(probe, last, t, level, tol);
                return true;
            }
            last = t;
        }
        return false;
    };

    double lower = std::numeric_limits<double>::quiet_NaN();
    double upper = std::numeric_limits<double>::quiet_NaN();
    const bool found_lo = walk(-1.0, lower);
    const bool found_hi = walk(+1.0, upper);
    out.lower_m = lower;
    out.upper_m = upper;
    out.width_lambda = (upper - lower) / lambda;

    // Both crossings must keep the margin from the array edge.
    const double inner = region.radius_m - region.margin_m;
    auto clear_of_edge = [&](double t) { return on_line(focal.focal, axis, t).norm() <= inner; };
    out.resolvable = found_lo && found_hi && clear_of_edge(lower) && clear_of_edge(upper);
    return out;
}

std::vector<WidthRecord> width_scan(const ElementSet &elements, std::span<const double> focal_x_m,
                                    const ScanOptions &opts)
{
    opts.validate();
    const double lambda = elements.config().wavelength_m;
    std::vector<WidthRecord> out(focal_x_m.size());
    parallel_for(out.size(), opts.threads, [&](std::size_t i) {
        WidthRecord rec;
        rec.x_f_m = focal_x_m[i];
        rec.x_f_lambda = focal_x_m[i] / lambda;
        const FocalSpec focal{{focal_x_m[i], 0.0}};
        try
        {
            rec.x = focal_width(elements, focal, Axis::X, opts);
            rec.y = focal_width(elements, focal, Axis::Y, opts);
            rec.resolvable = rec.x.resolvable && rec.y.resolvable;
            rec.ok = true;
        }
        catch (const std::domain_error &e)
        {
            rec.error = e.what();
        }
        out[i] = rec;
    });
    return out;
}

namespace
{

SidelobeRecord sidelobe_line(const ElementSet &elements, const FocalSpec &focal, const ValidityRegion &region,
                             const ScanOptions &opts)
{
    const double lambda = elements.config().wavelength_m;
    const double h = opts.sll_line_step_lambda * lambda;
    const LineProbe probe{elements, focal, region, Axis::X};

    SidelobeRecord rec;
    rec.main = focal_lobe_peak_line(elements, focal, Axis::X, region, opts);

    const auto coords = linspace_step(-region.radius_m, region.radius_m, h);
    const std::size_t n = coords.size();
    std::vector<double> vals(n);
    std::vector<char> ok(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        ok[i] = probe.valid(coords[i]);
        vals[i] = ok[i] ? probe(coords[i]) : 0.0;
    }

    // Sample index of the main lobe, then its first nulls on either side.
    auto nearest = static_cast<std::size_t>(
        std::clamp<long long>(std::llround((rec.main.location.x - coords.front()) / h), 0, static_cast<long long>(n) - 1));
    while (nearest > 0 && ok[nearest - 1] && vals[nearest - 1] > vals[nearest])
        --nearest;
    while (nearest + 1 < n && ok[nearest + 1] && vals[nearest + 1] > vals[nearest])
        ++nearest;
    std::size_t lnull = nearest, rnull = nearest;
    while (lnull > 0 && ok[lnull - 1] && vals[lnull - 1] <= vals[lnull])
        --lnull;
    while (rnull + 1 < n && ok[rnull + 1] && vals[rnull + 1] <= vals[rnull])
        ++rnull;

    for (std::size_t i = 1; i + 1 < n; ++i)
    {
        if (i >= lnull && i <= rnull)
            continue;
        if (!ok[i - 1] || !ok[i] || !ok[i + 1])
            continue;
        if (!(vals[i] >= vals[i - 1] && vals[i] >= vals[i + 1]))
            continue;
        const auto [t, v] = refine_line_max(probe, coords[i], h, opts.peak_tol_lambda * lambda);
        const PeakResult cand{{t, focal.focal.y}, v};
        if (better_candidate(cand, rec.sidelobe, rec.main.location))
            rec.sidelobe = cand;
    }
    return rec;
}

// Steepest 8-neighbour ascent over valid samples.
std::size_t climb_map(const FieldMap &map, std::size_t ix, std::size_t iy)
{
    const auto nx = map.grid.nx, ny = map.grid.ny;
    while (true)
    {
        std::size_t bx = ix, by = iy;
        double best = std::abs(map.at(ix, iy).value);
        for (int dy = -1; dy <= 1; ++dy)
        {
            for (int dx = -1; dx <= 1; ++dx)
            {
                const long long x = static_cast<long long>(ix) + dx, y = static_cast<long long>(iy) + dy;
                if (x < 0 || y < 0 || x >= static_cast<long long>(nx) || y >= static_cast<long long>(ny))
                    continue;
                const auto &s = map.at(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
                if (s.valid && std::abs(s.value) > best)
                {
                    best = std::abs(s.value);
                    bx = static_cast<std::size_t>(x);
                    by = static_cast<std::size_t>(y);
                }
            }
        }
        if (bx == ix && by == iy)
            return iy * nx + ix;
        ix = bx;
        iy = by;
    }
}

SidelobeRecord sidelobe_plane(const ElementSet &elements, const FocalSpec &focal, const ValidityRegion &region,
                              const ScanOptions &opts, int threads)
{
    if (!is_valid_point(focal.focal, region, elements))
        throw std::domain_error("focal point lies in the masked region");
    const double lambda = elements.config().wavelength_m;
    const auto grid = GridSpec::covering_aperture(region.radius_m, opts.plane_step_lambda * lambda);
    const FieldMap map = field_map(grid, elements, focal, region, threads);

    auto clamp_index = [](double v, std::size_t n) {
        return static_cast<std::size_t>(std::clamp<long long>(std::llround(v), 0, static_cast<long long>(n) - 1));
    };
    std::size_t ix = clamp_index((focal.focal.x - grid.origin.x) / grid.step_m, grid.nx);
    std::size_t iy = clamp_index((focal.focal.y - grid.origin.y) / grid.step_m, grid.ny);
    if (!map.at(ix, iy).valid)
        throw std::domain_error("focal point has no valid grid neighbour");
    const std::size_t main_index = climb_map(map, ix, iy);

    SidelobeRecord rec;
    rec.main = {map.samples[main_index].point, std::abs(map.samples[main_index].value)};
    for (const auto &m : local_maxima(map))
    {
        if (m.index == main_index)
            continue;
        const PeakResult cand{m.location, m.magnitude};
        if (better_candidate(cand, rec.sidelobe, rec.main.location))
            rec.sidelobe = cand;
    }
    return rec;
}

SidelobeRecord sidelobe_impl(const ElementSet &elements, const FocalSpec &focal, const ScanOptions &opts,
                             int inner_threads)
{
    const auto region = ValidityRegion::for_array(elements.config(), opts.margin_lambda);
    SidelobeRecord rec;
    try
    {
        rec = opts.sll_domain == SearchDomain::Line ? sidelobe_line(elements, focal, region, opts)
                                                    : sidelobe_plane(elements, focal, region, opts, inner_threads);
        rec.ok = true;
        if (rec.sidelobe)
            rec.sll_db = 20.0 * std::log10(rec.main.field / rec.sidelobe->field);
        else
            rec.sll_db = std::numeric_limits<double>::quiet_NaN();
    }
    catch (const std::domain_error &e)
    {
        rec = SidelobeRecord{};
        rec.error = e.what();
    }
    rec.x_f_m = focal.focal.x;
    rec.x_f_lambda = focal.focal.x / elements.config().wavelength_m;
    return rec;
}

} // namespace

SidelobeRecord sidelobe_at(const ElementSet &elements, const FocalSpec &focal, const ScanOptions &opts)
{
    opts.validate();
    return sidelobe_impl(elements, focal, opts, opts.threads);
}

std::vector<SidelobeRecord> sidelobe_scan(const ElementSet &elements, std::span<const double> focal_x_m,
                                          const ScanOptions &opts)
{
    opts.validate();
    std::vector<SidelobeRecord> out(focal_x_m.size());
    if (opts.sll_domain == SearchDomain::Plane)
    {
        // Each map is already point-parallel.
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = sidelobe_impl(elements, FocalSpec{{focal_x_m[i], 0.0}}, opts, opts.threads);
        return out;
    }
    parallel_for(out.size(), opts.threads, [&](std::size_t i) {
        out[i] = sidelobe_impl(elements, FocalSpec{{focal_x_m[i], 0.0}}, opts, 1);
    });
    return out;
}

double array_factor(const ElementSet &elements, double phi_rad, double steering_rad)
{
    const double k = elements.config().wavenumber();
    const double ux = std::cos(phi_rad) - std::cos(steering_rad);
    const double uy = std::sin(phi_rad) - std::sin(steering_rad);
    Complex sum{0.0, 0.0};
    for (const Point2 &r : elements.positions())
        sum += std::polar(1.0, k * (ux * r.x + uy * r.y));
    return std::abs(sum);
}

FarFieldPattern far_field_pattern(const ElementSet &elements, double steering_deg, double angular_step_deg,
                                  int threads)
{
    if (!(angular_step_deg > 0.0) || angular_step_deg > 0.1 + 1e-12)
        throw std::invalid_argument("angular_step_deg: must be in (0, 0.1]");
    constexpr double deg = pi / 180.0;
    const double steer = steering_deg * deg;

    FarFieldPattern out;
    out.steering_deg = steering_deg;
    out.step_deg = angular_step_deg;
    const auto n = static_cast<std::size_t>(std::llround(360.0 / angular_step_deg));
    out.phi_deg.resize(n);
    out.magnitude.resize(n);
    parallel_for(n, threads, [&](std::size_t i) {
        out.phi_deg[i] = static_cast<double>(i) * angular_step_deg;
        out.magnitude[i] = array_factor(elements, out.phi_deg[i] * deg, steer);
    });
    const auto peak = std::max_element(out.magnitude.begin(), out.magnitude.end());
    out.peak_deg = out.phi_deg[static_cast<std::size_t>(peak - out.magnitude.begin())];

    // Half-power crossings either side of the steering direction.
    const double level = array_factor(elements, steer, steer) * inv_sqrt2;
    auto af = [&](double phi_d) { return array_factor(elements, phi_d * deg, steer); };
    auto crossing = [&](double dir) {
        double last = steering_deg;
        for (std::size_t i = 1; i <= n / 2; ++i)
        {
            const double phi = steering_deg + dir * static_cast<double>(i) * angular_step_deg;
            if (af(phi) < level)
            {
                double above = last, below = phi;
                while (std::abs(below - above) > 1e-10)
                {
                    const double mid = 0.5 * (above + below);
                    (af(mid) >= level ? above : below) = mid;
                }
                return 0.5 * (above + below);
            }
            last = phi;
        }
        return steering_deg + dir * 180.0;
    };
    out.beamwidth_deg = crossing(+1.0) - crossing(-1.0);
    return out;
}

std::vector<NfFfRow> nf_ff_comparison(std::span<const double> radii_m, int n_elements, double wavelength_m,
                                      double angular_step_deg, const ScanOptions &opts)
{
    opts.validate();
    std::vector<NfFfRow> rows;
    rows.reserve(radii_m.size());
    for (double rc : radii_m)
    {
        if (rc < 2.0 * wavelength_m * (1.0 - 1e-12))
            throw std::invalid_argument("radii: each radius must be at least 2 wavelengths");
        const ArrayConfig cfg{ArrayKind::FullCircle, n_elements, rc, wavelength_m, 1.0};
        const ElementSet elements = build_full_circle(cfg);
        NfFfRow row;
        row.r_c_m = rc;
        row.r_c_lambda = rc / wavelength_m;
        const AxisWidth w = focal_width(elements, FocalSpec{{0.0, 0.0}}, Axis::X, opts);
        row.nf_width_lambda = w.width_lambda;
        row.nf_resolvable = w.resolvable;
        row.ff_bw_deg = far_field_pattern(elements, 0.0, angular_step_deg, opts.threads).beamwidth_deg;
        rows.push_back(row);
    }
    return rows;
}

} // namespace nff
