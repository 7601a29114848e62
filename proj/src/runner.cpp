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

#include "nff/runner.hpp"

#include "nff/analysis.hpp"
#include "nff/closedform.hpp"
#include "nff/csv.hpp"
#include "nff/field.hpp"
#include "nff/validation.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace nff
{

std::string sha256_hex(std::string_view data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256: digest failed");
    std::string hex;
    hex.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i)
        hex += fmt::format("{:02x}", digest[i]);
    return hex;
}

std::string RunManifest::to_json() const
{
    nlohmann::ordered_json j;
    j["tool_version"] = tool_version;
    j["experiment"] = experiment;
    j["db_convention"] = db_convention;
    j["spec"] = spec_text;
    j["outputs"] = nlohmann::ordered_json::array();
    for (const auto &o : outputs)
        j["outputs"].push_back({{"file", o.name}, {"sha256", o.sha256}, {"bytes", o.bytes}});
    j["notes"] = notes;
    j["failures"] = failures;
    j["status"] = status;
    j["wall_clock_seconds"] = wall_clock_seconds;
    return j.dump(2) + "\n";
}

namespace
{

void experiment_map(const ExperimentSpec &spec, ArtifactSet &out)
{
    const double lambda = spec.array.wavelength_m;
    const auto elements = build_array(spec.array);
    const auto region = ValidityRegion::for_array(spec.array, spec.margin_lambda);
    const FocalSpec focal{{spec.focal_x_lambda * lambda, spec.focal_y_lambda * lambda}};
    if (!is_valid_point(focal.focal, region, elements))
        throw std::invalid_argument("focal_x_lambda/focal_y_lambda: focal point lies in the masked region");

    const auto grid = GridSpec::covering_aperture(spec.array.radius_m, spec.grid_step_lambda * lambda);
    const auto map = field_map(grid, elements, focal, region, spec.threads);
    out.files.push_back({"field_map.csv", csv::field_map(map)});
    if (map.peak)
        out.notes.push_back(fmt::format("map peak {} V/m at ({}, {}) m", csv::format_number(map.peak->magnitude),
                                        csv::format_number(map.peak->location.x),
                                        csv::format_number(map.peak->location.y)));
    else
        out.notes.push_back("map has no valid sample: no peak");

    const double rc = spec.array.radius_m;
    const auto line = field_line(Axis::X, -rc, rc, spec.line_step_lambda * lambda, elements, focal, region,
                                 spec.threads);
    out.files.push_back({"field_line_x.csv", csv::field_line(line, Axis::X, lambda)});
}

void experiment_scan_gain(const ExperimentSpec &spec, ArtifactSet &out)
{
    const auto elements = build_array(spec.array);
    const auto xs = spec.scan_positions_m();
    const auto recs = peak_gain_scan(elements, xs, spec.scan_options());
    out.files.push_back({"gain_scan.csv", csv::gain_scan(recs)});
    std::size_t bad = 0;
    for (const auto &r : recs)
        if (!r.ok)
        {
            ++bad;
            out.notes.push_back(fmt::format("x_f={} lambda: {}", csv::format_number(r.x_f_lambda), r.error));
        }
    if (bad == recs.size())
        out.failures.push_back("scan-gain: no focal position produced a peak");
}

void experiment_scan_width(const ExperimentSpec &spec, ArtifactSet &out)
{
    const auto elements = build_array(spec.array);
    const auto recs = width_scan(elements, spec.scan_positions_m(), spec.scan_options());
    out.files.push_back({"width_scan.csv", csv::width_scan(recs)});
    const bool any = std::any_of(recs.begin(), recs.end(), [](const auto &r) { return r.ok && r.resolvable; });
    if (!any)
        out.failures.push_back("scan-width: 3 dB width unresolvable at every focal position");
}

void experiment_scan_sll(const ExperimentSpec &spec, ArtifactSet &out)
{
    const auto elements = build_array(spec.array);
    const auto recs = sidelobe_scan(elements, spec.scan_positions_m(), spec.scan_options());
    out.files.push_back({"sll_scan.csv", csv::sll_scan(recs)});
    std::size_t found = 0;
    for (const auto &r : recs)
    {
        if (r.ok && r.sidelobe)
            ++found;
        else
            out.notes.push_back(fmt::format("x_f={} lambda: {}", csv::format_number(r.x_f_lambda),
                                            r.ok ? "no sidelobe inside the aperture" : r.error));
    }
    if (found == 0)
        out.failures.push_back("scan-sll: no sidelobe found at any focal position");
}

void experiment_nf_ff(const ExperimentSpec &spec, ArtifactSet &out)
{
    std::vector<double> radii_m;
    for (double r : spec.radii_lambda)
        radii_m.push_back(r * spec.array.wavelength_m);
    const auto rows = nf_ff_comparison(radii_m, spec.array.n_elements, spec.array.wavelength_m,
                                       spec.angular_step_deg, spec.scan_options());
    out.files.push_back({"nf_ff.csv", csv::nf_ff(rows)});
    for (const auto &r : rows)
        if (!r.nf_resolvable)
            out.failures.push_back(fmt::format("nf-ff: NF width unresolvable at r_c={} lambda",
                                               csv::format_number(r.r_c_lambda)));
}

void experiment_closed_form(const ExperimentSpec &spec, ArtifactSet &out)
{
    ArrayConfig cfg = spec.array;
    cfg.kind = ArrayKind::FullCircle;
    const auto elements = build_full_circle(cfg);
    std::vector<double> deltas;
    const auto count = static_cast<std::size_t>(std::llround(spec.delta_max_lambda / spec.delta_step_lambda)) + 1;
    for (std::size_t i = 0; i < count; ++i)
        deltas.push_back(static_cast<double>(i) * spec.delta_step_lambda);
    const auto rows = closed_form_table(elements, deltas, spec.margin_lambda, spec.threads);
    out.files.push_back({"closed_form.csv", csv::closed_form(rows)});
    if (!bessel_regime_ok(spec.delta_max_lambda * cfg.wavelength_m, cfg.radius_m))
        out.notes.push_back("closed-form: offsets beyond r_c/5 lie outside the small-offset regime of the "
                            "Bessel approximation");
}

void experiment_validate(const ExperimentSpec &spec, ArtifactSet &out)
{
    const auto checks = run_validation(spec.threads);
    out.files.push_back({"validation_report.txt", render_validation_report(checks)});
    for (const auto &c : checks)
        if (!c.passed)
            out.failures.push_back("validate: " + c.name);
}

} // namespace

ArtifactSet compute_artifacts(const ExperimentSpec &spec)
{
    spec.validate();
    ArtifactSet out;
    switch (spec.experiment)
    {
    case Experiment::Map:
        experiment_map(spec, out);
        break;
    case Experiment::ScanGain:
        experiment_scan_gain(spec, out);
        break;
    case Experiment::ScanWidth:
        experiment_scan_width(spec, out);
        break;
    case Experiment::ScanSll:
        experiment_scan_sll(spec, out);
        break;
    case Experiment::NfFf:
        experiment_nf_ff(spec, out);
        break;
    case Experiment::ClosedForm:
        experiment_closed_form(spec, out);
        break;
    case Experiment::Validate:
        experiment_validate(spec, out);
        break;
    }
    return out;
}

RunManifest run(const ExperimentSpec &spec)
{
    const auto t0 = std::chrono::steady_clock::now();
    const ArtifactSet artifacts = compute_artifacts(spec);

    namespace fs = std::filesystem;
    const fs::path dir(spec.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw std::runtime_error(fmt::format("output_dir: cannot create '{}': {}", spec.output_dir, ec.message()));

    RunManifest manifest;
    manifest.tool_version = std::string(tool_version);
    manifest.spec_text = to_config_text(spec);
    manifest.experiment = std::string(to_string(spec.experiment));
    manifest.db_convention = std::string(to_string(spec.db));
    manifest.notes = artifacts.notes;
    manifest.failures = artifacts.failures;
    manifest.status = artifacts.failures.empty() ? status_ok : status_numeric_failure;

    auto write = [&](const std::string &name, const std::string &content) {
        std::ofstream f(dir / name, std::ios::binary);
        f << content;
        if (!f)
            throw std::runtime_error(fmt::format("cannot write '{}'", (dir / name).string()));
    };
    for (const auto &a : artifacts.files)
    {
        write(a.name, a.content);
        manifest.outputs.push_back({a.name, sha256_hex(a.content), a.content.size()});
    }
    manifest.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write("manifest.json", manifest.to_json());
    return manifest;
}

} // namespace nff
