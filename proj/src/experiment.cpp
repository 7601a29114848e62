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

#include "nff/experiment.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace nff
{

namespace
{

struct ExperimentName
{
    Experiment value;
    std::string_view name;
};

constexpr ExperimentName experiment_names[] = {
    {Experiment::Map, "map"},           {Experiment::ScanGain, "scan-gain"},
    {Experiment::ScanWidth, "scan-width"}, {Experiment::ScanSll, "scan-sll"},
    {Experiment::NfFf, "nf-ff"},        {Experiment::ClosedForm, "closed-form"},
    {Experiment::Validate, "validate"},
};

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(std::string_view key, std::string_view text)
{
    text = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
        throw std::invalid_argument(fmt::format("{}: expected a number, got '{}'", key, text));
    return v;
}

int parse_int(std::string_view key, std::string_view text)
{
    text = trim(text);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument(fmt::format("{}: expected an integer, got '{}'", key, text));
    return v;
}

std::vector<double> parse_list(std::string_view key, std::string_view text)
{
    std::vector<double> out;
    while (!text.empty())
    {
        const auto comma = text.find(',');
        out.push_back(parse_double(key, text.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    if (out.empty())
        throw std::invalid_argument(fmt::format("{}: expected a comma-separated list", key));
    return out;
}

// Shortest text that parses back to the same double.
std::string num(double v) { return fmt::format("{}", v); }

struct Field
{
    std::string_view key;
    std::function<void(ExperimentSpec &, std::string_view)> set;
    std::function<std::string(const ExperimentSpec &)> get; // empty optional -> ""
};

const std::vector<Field> &fields()
{
    static const std::vector<Field> table = {
        {"experiment", [](auto &s, auto v) { s.experiment = parse_experiment(trim(v)); },
         [](const auto &s) { return std::string(to_string(s.experiment)); }},
        {"kind", [](auto &s, auto v) { s.array.kind = parse_array_kind(trim(v)); },
         [](const auto &s) { return std::string(to_string(s.array.kind)); }},
        {"n_elements", [](auto &s, auto v) { s.array.n_elements = parse_int("n_elements", v); },
         [](const auto &s) { return std::to_string(s.array.n_elements); }},
        {"radius_m", [](auto &s, auto v) { s.array.radius_m = parse_double("radius_m", v); },
         [](const auto &s) { return num(s.array.radius_m); }},
        {"wavelength_m", [](auto &s, auto v) { s.array.wavelength_m = parse_double("wavelength_m", v); },
         [](const auto &s) { return num(s.array.wavelength_m); }},
        {"source_amplitude", [](auto &s, auto v) { s.array.source_amplitude = parse_double("source_amplitude", v); },
         [](const auto &s) { return num(s.array.source_amplitude); }},
        {"margin_lambda", [](auto &s, auto v) { s.margin_lambda = parse_double("margin_lambda", v); },
         [](const auto &s) { return num(s.margin_lambda); }},
        {"focal_x_lambda", [](auto &s, auto v) { s.focal_x_lambda = parse_double("focal_x_lambda", v); },
         [](const auto &s) { return num(s.focal_x_lambda); }},
        {"focal_y_lambda", [](auto &s, auto v) { s.focal_y_lambda = parse_double("focal_y_lambda", v); },
         [](const auto &s) { return num(s.focal_y_lambda); }},
        {"grid_step_lambda", [](auto &s, auto v) { s.grid_step_lambda = parse_double("grid_step_lambda", v); },
         [](const auto &s) { return num(s.grid_step_lambda); }},
        {"line_step_lambda", [](auto &s, auto v) { s.line_step_lambda = parse_double("line_step_lambda", v); },
         [](const auto &s) { return num(s.line_step_lambda); }},
        {"scan_start_lambda",
         [](auto &s, auto v) {
             s.scan_start_lambda = trim(v).empty() ? std::nullopt
                                                   : std::optional(parse_double("scan_start_lambda", v));
         },
         [](const auto &s) { return s.scan_start_lambda ? num(*s.scan_start_lambda) : std::string(); }},
        {"scan_stop_lambda",
         [](auto &s, auto v) {
             s.scan_stop_lambda = trim(v).empty() ? std::nullopt
                                                  : std::optional(parse_double("scan_stop_lambda", v));
         },
         [](const auto &s) { return s.scan_stop_lambda ? num(*s.scan_stop_lambda) : std::string(); }},
        {"scan_step_lambda", [](auto &s, auto v) { s.scan_step_lambda = parse_double("scan_step_lambda", v); },
         [](const auto &s) { return num(s.scan_step_lambda); }},
        {"search_step_lambda", [](auto &s, auto v) { s.search_step_lambda = parse_double("search_step_lambda", v); },
         [](const auto &s) { return num(s.search_step_lambda); }},
        {"gain_domain", [](auto &s, auto v) { s.gain_domain = parse_search_domain(trim(v)); },
         [](const auto &s) { return std::string(to_string(s.gain_domain)); }},
        {"sll_domain", [](auto &s, auto v) { s.sll_domain = parse_search_domain(trim(v)); },
         [](const auto &s) { return std::string(to_string(s.sll_domain)); }},
        {"sll_line_step_lambda",
         [](auto &s, auto v) { s.sll_line_step_lambda = parse_double("sll_line_step_lambda", v); },
         [](const auto &s) { return num(s.sll_line_step_lambda); }},
        {"plane_step_lambda", [](auto &s, auto v) { s.plane_step_lambda = parse_double("plane_step_lambda", v); },
         [](const auto &s) { return num(s.plane_step_lambda); }},
        {"radii_lambda", [](auto &s, auto v) { s.radii_lambda = parse_list("radii_lambda", v); },
         [](const auto &s) {
             std::string out;
             for (std::size_t i = 0; i < s.radii_lambda.size(); ++i)
                 out += (i ? ", " : "") + num(s.radii_lambda[i]);
             return out;
         }},
        {"angular_step_deg", [](auto &s, auto v) { s.angular_step_deg = parse_double("angular_step_deg", v); },
         [](const auto &s) { return num(s.angular_step_deg); }},
        {"delta_max_lambda", [](auto &s, auto v) { s.delta_max_lambda = parse_double("delta_max_lambda", v); },
         [](const auto &s) { return num(s.delta_max_lambda); }},
        {"delta_step_lambda", [](auto &s, auto v) { s.delta_step_lambda = parse_double("delta_step_lambda", v); },
         [](const auto &s) { return num(s.delta_step_lambda); }},
        {"db_convention", [](auto &s, auto v) { s.db = parse_db_convention(trim(v)); },
         [](const auto &s) { return std::string(to_string(s.db)); }},
        {"threads", [](auto &s, auto v) { s.threads = parse_int("threads", v); },
         [](const auto &s) { return std::to_string(s.threads); }},
        {"output_dir", [](auto &s, auto v) { s.output_dir = std::string(trim(v)); },
         [](const auto &s) { return s.output_dir; }},
    };
    return table;
}

} // namespace

std::string_view to_string(Experiment e)
{
    for (const auto &n : experiment_names)
        if (n.value == e)
            return n.name;
    return "unknown";
}

Experiment parse_experiment(std::string_view text)
{
    for (const auto &n : experiment_names)
        if (n.name == text)
            return n.value;
    throw std::invalid_argument(fmt::format("experiment: unknown experiment '{}'", text));
}

void ExperimentSpec::validate() const
{
    array.validate();
    auto positive = [](std::string_view key, double v) {
        if (!(v > 0.0))
            throw std::invalid_argument(fmt::format("{}: must be positive, got {}", key, v));
    };
    positive("margin_lambda", margin_lambda);
    positive("grid_step_lambda", grid_step_lambda);
    positive("line_step_lambda", line_step_lambda);
    positive("scan_step_lambda", scan_step_lambda);
    positive("search_step_lambda", search_step_lambda);
    positive("sll_line_step_lambda", sll_line_step_lambda);
    positive("plane_step_lambda", plane_step_lambda);
    positive("angular_step_deg", angular_step_deg);
    positive("delta_max_lambda", delta_max_lambda);
    positive("delta_step_lambda", delta_step_lambda);
    if (search_step_lambda > 1.0 / 50.0 + 1e-15)
        throw std::invalid_argument("search_step_lambda: must not exceed 1/50");
    if (angular_step_deg > 0.1 + 1e-12)
        throw std::invalid_argument("angular_step_deg: must not exceed 0.1");
    if (threads < 0)
        throw std::invalid_argument("threads: must be >= 0");
    if (scan_start_lambda && scan_stop_lambda && *scan_start_lambda > *scan_stop_lambda)
        throw std::invalid_argument("scan_start_lambda: must not exceed scan_stop_lambda");
    if (radii_lambda.empty())
        throw std::invalid_argument("radii_lambda: must list at least one radius");
    for (double r : radii_lambda)
        if (r < 2.0)
            throw std::invalid_argument(fmt::format("radii_lambda: each radius must be >= 2, got {}", r));
    if (output_dir.empty())
        throw std::invalid_argument("output_dir: must not be empty");
}

ScanOptions ExperimentSpec::scan_options() const
{
    ScanOptions o;
    o.margin_lambda = margin_lambda;
    o.search_step_lambda = search_step_lambda;
    o.sll_line_step_lambda = sll_line_step_lambda;
    o.plane_step_lambda = plane_step_lambda;
    o.db = db;
    o.gain_domain = gain_domain;
    o.sll_domain = sll_domain;
    o.threads = threads;
    return o;
}

std::vector<double> ExperimentSpec::scan_positions_m() const
{
    const double lambda = array.wavelength_m;
    const double reach = array.radius_m / lambda - margin_lambda;
    const double limit = std::floor(reach / scan_step_lambda + 1e-9) * scan_step_lambda;
    const double start = scan_start_lambda.value_or(-limit);
    const double stop = scan_stop_lambda.value_or(limit);
    const auto count = static_cast<std::size_t>(std::llround((stop - start) / scan_step_lambda)) + 1;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = (start + static_cast<double>(i) * scan_step_lambda) * lambda;
    return out;
}

ExperimentSpec parse_config(std::string_view text)
{
    ExperimentSpec spec;
    std::optional<double> radius_lambda;
    std::size_t line_no = 0;
    while (!text.empty())
    {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument(fmt::format("config line {}: expected 'key = value'", line_no));
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));

        // Alternative radius spelling in wavelengths; resolved after parsing.
        if (key == "radius_lambda")
        {
            radius_lambda = parse_double(key, value);
            continue;
        }
        bool known = false;
        for (const auto &f : fields())
        {
            if (f.key == key)
            {
                try
                {
                    f.set(spec, value);
                }
                catch (const std::invalid_argument &e)
                {
                    throw std::invalid_argument(fmt::format("config line {}: {}", line_no, e.what()));
                }
                known = true;
                break;
            }
        }
        if (!known)
            throw std::invalid_argument(fmt::format("config line {}: unknown key '{}'", line_no, key));
    }
    if (radius_lambda)
        spec.array.radius_m = *radius_lambda * spec.array.wavelength_m;
    return spec;
}

ExperimentSpec load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument(fmt::format("config: cannot open '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string to_config_text(const ExperimentSpec &spec)
{
    std::string out;
    for (const auto &f : fields())
        out += fmt::format("{} = {}\n", f.key, f.get(spec));
    return out;
}

bool equivalent(const ExperimentSpec &a, const ExperimentSpec &b)
{
    return to_config_text(a) == to_config_text(b);
}

} // namespace nff
