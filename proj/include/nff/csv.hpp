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

#ifndef NFF_CSV_HPP
#define NFF_CSV_HPP

#include "nff/analysis.hpp"
#include "nff/closedform.hpp"
#include "nff/field.hpp"

#include <span>
#include <string>

namespace nff::csv
{

// 12 significant digits, "nan"/"inf" spelled out, negative zero folded to 0.
std::string format_number(double v);

// x_m,y_m,re,im,magnitude,valid (row-major)
std::string field_map(const FieldMap &map);

// coord_m,coord_lambda,magnitude,magnitude_norm,valid; magnitude_norm is
// relative to the largest valid magnitude on the line.
std::string field_line(std::span<const FieldSample> samples, Axis axis, double wavelength_m);

// x_f_m,x_f_lambda,peak_field_vpm,gain_db,peak_loc_m
std::string gain_scan(std::span<const GainScanRecord> records);

// x_f_lambda,width_x_lambda,width_y_lambda,resolvable
std::string width_scan(std::span<const WidthRecord> records);

// x_f_lambda,sll_db,sidelobe_loc_m
std::string sll_scan(std::span<const SidelobeRecord> records);

// r_c_lambda,nf_width_lambda,ff_bw_deg
std::string nf_ff(std::span<const NfFfRow> rows);

// delta_lambda,eq1_norm,eq3_norm,eq4_norm,quadrature_norm
std::string closed_form(std::span<const ClosedFormRow> rows);

} // namespace nff::csv

#endif
