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

#ifndef NFF_EXPERIMENT_HPP
#define NFF_EXPERIMENT_HPP

#include "nff/analysis.hpp"
#include "nff/geometry.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nff
{

enum class Experiment
{
    Map,
    ScanGain,
    ScanWidth,
    ScanSll,
    NfFf,
    ClosedForm,
    Validate
};

std::string_view to_string(Experiment e);
Experiment parse_experiment(std::string_view text);

// Everything needed to reproduce one run. Defaults are the flagship setup:
// full circle, N = 120, lambda = 0.2 m, r_c = 1.5 m, E0 = 1, margin 0.2 lambda.
struct ExperimentSpec
{
    Experiment experiment = Experiment::ScanGain;
    ArrayConfig array;
    double margin_lambda = default_margin_lambda;

    // map / line
    double focal_x_lambda = 0.0;
    double focal_y_lambda = 0.0;
    double grid_step_lambda = 0.05;
    double line_step_lambda = 0.01;

    // scans along x; unset bounds default to the valid diameter
    std::optional<double> scan_start_lambda;
    std::optional<double> scan_stop_lambda;
    double scan_step_lambda = 0.1;
    double search_step_lambda = 0.02;
    SearchDomain gain_domain = SearchDomain::Line;
    SearchDomain sll_domain = SearchDomain::Line;
    double sll_line_step_lambda = 0.01;
    double plane_step_lambda = 0.025;

    // nf-ff
    std::vector<double> radii_lambda = {2, 3, 4, 5, 6, 7, 8, 9, 10};
    double angular_step_deg = 0.01;

    // closed-form
    double delta_max_lambda = 5.0;
    double delta_step_lambda = 0.01;

    DbConvention db = DbConvention::Field10;
    int threads = 0; // 0: all cores
    std::string output_dir = "out";

    // Throws std::invalid_argument naming the offending field.
    void validate() const;

    ScanOptions scan_options() const;

    // Focal positions x_f (meters) of a scan, resolved against the defaults.
    std::vector<double> scan_positions_m() const;
};

// Parses the flat `key = value` config format ('#' starts a comment).
// Unknown keys and malformed values raise std::invalid_argument naming the
// key and line.
ExperimentSpec parse_config(std::string_view text);
ExperimentSpec load_config(const std::string &path);

// Canonical text form; parse_config(to_config_text(s)) reproduces s.
std::string to_config_text(const ExperimentSpec &spec);

bool equivalent(const ExperimentSpec &a, const ExperimentSpec &b);

} // namespace nff

#endif
