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

#include "nff/csv.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

namespace nff::csv
{

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (v == 0.0)
        return "0";
    return fmt::format("{:.12g}", v);
}

namespace
{

void row(std::string &out, std::initializer_list<std::string> cells)
{
    bool first = true;
    for (const auto &c : cells)
    {
        if (!first)
            out += ',';
        out += c;
        first = false;
    }
    out += '\n';
}

std::string flag(bool b) { return b ? "1" : "0"; }

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

} // namespace

std::string field_map(const FieldMap &map)
{
    std::string out = "x_m,y_m,re,im,magnitude,valid\n";
    for (const auto &s : map.samples)
        row(out, {format_number(s.point.x), format_number(s.point.y), format_number(s.value.real()),
                  format_number(s.value.imag()), format_number(std::abs(s.value)), flag(s.valid)});
    return out;
}

std::string field_line(std::span<const FieldSample> samples, Axis axis, double wavelength_m)
{
    double peak = 0.0;
    for (const auto &s : samples)
        if (s.valid)
            peak = std::max(peak, std::abs(s.value));
    std::string out = "coord_m,coord_lambda,magnitude,magnitude_norm,valid\n";
    for (const auto &s : samples)
    {
        const double coord = axis == Axis::X ? s.point.x : s.point.y;
        const double mag = std::abs(s.value);
        row(out, {format_number(coord), format_number(coord / wavelength_m), format_number(mag),
                  format_number(peak > 0.0 ? mag / peak : 0.0), flag(s.valid)});
    }
    return out;
}

std::string gain_scan(std::span<const GainScanRecord> records)
{
    std::string out = "x_f_m,x_f_lambda,peak_field_vpm,gain_db,peak_loc_m\n";
    for (const auto &r : records)
        row(out, {format_number(r.x_f_m), format_number(r.x_f_lambda), format_number(r.ok ? r.peak_field : nan),
                  format_number(r.ok ? r.gain_db : nan), format_number(r.ok ? r.peak_location.x : nan)});
    return out;
}

std::string width_scan(std::span<const WidthRecord> records)
{
    std::string out = "x_f_lambda,width_x_lambda,width_y_lambda,resolvable\n";
    for (const auto &r : records)
        row(out, {format_number(r.x_f_lambda), format_number(r.ok ? r.x.width_lambda : nan),
                  format_number(r.ok ? r.y.width_lambda : nan), flag(r.ok && r.resolvable)});
    return out;
}

std::string sll_scan(std::span<const SidelobeRecord> records)
{
    std::string out = "x_f_lambda,sll_db,sidelobe_loc_m\n";
    for (const auto &r : records)
    {
        const bool has = r.ok && r.sidelobe.has_value();
        row(out, {format_number(r.x_f_lambda), format_number(has ? r.sll_db : nan),
                  format_number(has ? r.sidelobe->location.x : nan)});
    }
    return out;
}

std::string nf_ff(std::span<const NfFfRow> rows)
{
    std::string out = "r_c_lambda,nf_width_lambda,ff_bw_deg\n";
    for (const auto &r : rows)
        row(out, {format_number(r.r_c_lambda), format_number(r.nf_resolvable ? r.nf_width_lambda : nan),
                  format_number(r.ff_bw_deg)});
    return out;
}

std::string closed_form(std::span<const ClosedFormRow> rows)
{
    std::string out = "delta_lambda,eq1_norm,eq3_norm,eq4_norm,quadrature_norm\n";
    for (const auto &r : rows)
        row(out, {format_number(r.delta_lambda), format_number(r.eq1_norm), format_number(r.eq3_norm),
                  format_number(r.eq4_norm), format_number(r.quadrature_norm)});
    return out;
}

} // namespace nff::csv
