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

#ifndef NFF_ANALYSIS_HPP
#define NFF_ANALYSIS_HPP

#include "nff/field.hpp"
#include "nff/geometry.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nff
{

// How a field magnitude |E| (in V/m) is turned into a gain figure.
enum class DbConvention
{
    Field10, // 10 log10(|E| / 1 V/m)
    Field20  // 20 log10(|E| / 1 V/m)
};

std::string_view to_string(DbConvention conv);
DbConvention parse_db_convention(std::string_view text);
double to_db(double field_magnitude, DbConvention conv);

enum class SearchDomain
{
    Line,  // the x-axis through the focal point
    Plane  // the whole aperture
};

std::string_view to_string(SearchDomain domain);
SearchDomain parse_search_domain(std::string_view text);

struct ScanOptions
{
    double margin_lambda = default_margin_lambda;
    double search_step_lambda = 1.0 / 50.0; // coarse peak/crossing walk, at most 1/50
    double peak_tol_lambda = 1e-5;          // golden-section refinement
    double crossing_tol_lambda = 1e-7;      // 3 dB crossing bisection
    double sll_line_step_lambda = 1.0 / 100.0;
    double plane_step_lambda = 1.0 / 40.0;
    DbConvention db = DbConvention::Field10;
    SearchDomain gain_domain = SearchDomain::Line;
    SearchDomain sll_domain = SearchDomain::Line;
    int threads = 1;

    void validate() const;
};

struct PeakResult
{
    Point2 location;
    double field = 0.0; // |E| in V/m
};

// Peak of the focal lobe: steepest ascent of the masked |E| from the focal
// point on a search_step lattice along `axis`, refined by golden section.
// The result may sit away from the focal point (focal shift).
// Throws std::domain_error if the focal point itself is masked.
PeakResult focal_lobe_peak_line(const ElementSet &elements, const FocalSpec &focal, Axis axis,
                                const ValidityRegion &region, const ScanOptions &opts);

// Same on the plane: 8-neighbour ascent with a shrinking step.
PeakResult focal_lobe_peak_plane(const ElementSet &elements, const FocalSpec &focal,
                                 const ValidityRegion &region, const ScanOptions &opts);

struct GainScanRecord
{
    double x_f_m = 0.0;
    double x_f_lambda = 0.0;
    double peak_field = 0.0; // V/m
    Point2 peak_location;    // m
    double gain_db = 0.0;
    bool ok = false;
    std::string error; // set when !ok
};

std::vector<GainScanRecord> peak_gain_scan(const ElementSet &elements, std::span<const double> focal_x_m,
                                           const ScanOptions &opts);

struct AxisWidth
{
    double width_lambda = 0.0;
    double lower_m = 0.0; // crossing coordinates along the axis
    double upper_m = 0.0;
    PeakResult peak;
    bool resolvable = false;
};

// 3 dB (half-power, |E| = peak/sqrt2) width along `axis` through the focal
// point. Unresolvable when a crossing is missing inside the valid region or
// lies closer than the margin to the array edge.
AxisWidth focal_width(const ElementSet &elements, const FocalSpec &focal, Axis axis,
                      const ScanOptions &opts);

struct WidthRecord
{
    double x_f_m = 0.0;
    double x_f_lambda = 0.0;
    AxisWidth x;
    AxisWidth y;
    bool resolvable = false; // both axes
    bool ok = false;
    std::string error;
};

std::vector<WidthRecord> width_scan(const ElementSet &elements, std::span<const double> focal_x_m,
                                    const ScanOptions &opts);

struct SidelobeRecord
{
    double x_f_m = 0.0;
    double x_f_lambda = 0.0;
    PeakResult main;
    std::optional<PeakResult> sidelobe; // empty: no sidelobe in the aperture
    double sll_db = 0.0;                // 20 log10(main / sidelobe)
    bool ok = false;
    std::string error;
};

SidelobeRecord sidelobe_at(const ElementSet &elements, const FocalSpec &focal, const ScanOptions &opts);

std::vector<SidelobeRecord> sidelobe_scan(const ElementSet &elements, std::span<const double> focal_x_m,
                                          const ScanOptions &opts);

// |sum_n exp(j*k*(u(phi) - u(phi0)) . r_n)| with u the in-plane unit vector.
double array_factor(const ElementSet &elements, double phi_rad, double steering_rad);

struct FarFieldPattern
{
    double steering_deg = 0.0;
    double step_deg = 0.0;
    std::vector<double> phi_deg;
    std::vector<double> magnitude;
    double peak_deg = 0.0;
    double beamwidth_deg = 0.0; // half-power
};

// Requires 0 < angular_step_deg <= 0.1.
FarFieldPattern far_field_pattern(const ElementSet &elements, double steering_deg, double angular_step_deg,
                                  int threads = 1);

struct NfFfRow
{
    double r_c_m = 0.0;
    double r_c_lambda = 0.0;
    double nf_width_lambda = 0.0;
    bool nf_resolvable = false;
    double ff_bw_deg = 0.0;
};

// Full circles of the given radii (each >= 2 lambda), focal point at the centre.
std::vector<NfFfRow> nf_ff_comparison(std::span<const double> radii_m, int n_elements, double wavelength_m,
                                      double angular_step_deg, const ScanOptions &opts);

} // namespace nff

#endif
