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

#include <catch2/catch_amalgamated.hpp>

#include "nff/closedform.hpp"
#include "nff/csv.hpp"
#include "nff/experiment.hpp"
#include "nff/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace nff;
namespace fs = std::filesystem;

namespace
{

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch_dir(const std::string &name)
{
    auto dir = fs::temp_directory_path() / ("nff_test_" + name);
    fs::remove_all(dir);
    return dir;
}

std::string error_of(std::string_view text)
{
    try
    {
        parse_config(text);
    }
    catch (const std::invalid_argument &e)
    {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("config parsing")
{
    const auto spec = parse_config("# flagship, half circle\n"
                                   "experiment = scan-width\n"
                                   "kind = half\n"
                                   "n_elements = 64   # trailing comment\n"
                                   "radius_lambda = 5\n"
                                   "scan_start_lambda = -2\n"
                                   "radii_lambda = 2, 4, 8\n"
                                   "db_convention = field20\n");
    CHECK(spec.experiment == Experiment::ScanWidth);
    CHECK(spec.array.kind == ArrayKind::HalfCircle);
    CHECK(spec.array.n_elements == 64);
    CHECK(spec.array.radius_m == Catch::Approx(1.0));
    REQUIRE(spec.scan_start_lambda);
    CHECK(*spec.scan_start_lambda == -2.0);
    CHECK_FALSE(spec.scan_stop_lambda);
    CHECK(spec.radii_lambda == std::vector<double>{2, 4, 8});
    CHECK(spec.db == DbConvention::Field20);
}

TEST_CASE("config errors name the key")
{
    CHECK_THAT(error_of("n_elements = 12\nradius_mm = 3\n"), Catch::Matchers::ContainsSubstring("radius_mm"));
    CHECK_THAT(error_of("n_elements = 12\nradius_mm = 3\n"), Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THAT(error_of("n_elements = twelve\n"), Catch::Matchers::ContainsSubstring("n_elements"));
    CHECK_THAT(error_of("kind = triangle\n"), Catch::Matchers::ContainsSubstring("kind"));
    CHECK_THAT(error_of("just words\n"), Catch::Matchers::ContainsSubstring("line 1"));

    ExperimentSpec s;
    s.array.n_elements = 0;
    CHECK_THROWS_WITH(s.validate(), Catch::Matchers::ContainsSubstring("n_elements"));
    s = {};
    s.array.wavelength_m = -1;
    CHECK_THROWS_WITH(s.validate(), Catch::Matchers::ContainsSubstring("wavelength_m"));
    s = {};
    s.search_step_lambda = 0.1;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("config text round trip")
{
    ExperimentSpec s;
    s.experiment = Experiment::ScanSll;
    s.array = {ArrayKind::HalfCircle, 77, 1.234567891234, 0.21, 2.5};
    s.scan_stop_lambda = 3.3;
    s.sll_domain = SearchDomain::Plane;
    s.radii_lambda = {2.5, 3.75};
    s.output_dir = "results/run 1";
    const auto back = parse_config(to_config_text(s));
    CHECK(equivalent(s, back));
    CHECK(to_config_text(back) == to_config_text(s));
}

TEST_CASE("default scan positions cover the valid diameter")
{
    ExperimentSpec s;
    const auto xs = s.scan_positions_m();
    REQUIRE(xs.size() == 147); // +-7.3 lambda at 0.1 lambda
    CHECK(xs.front() == Catch::Approx(-7.3 * 0.2));
    CHECK(xs.back() == Catch::Approx(7.3 * 0.2));
}

TEST_CASE("scan-gain example run")
{
    ExperimentSpec s;
    s.experiment = Experiment::ScanGain;
    s.scan_start_lambda = -7.0;
    s.scan_stop_lambda = 7.0;
    s.threads = 2;
    const auto art = compute_artifacts(s);
    REQUIRE(art.failures.empty());
    REQUIRE(art.files.size() == 1);
    CHECK(art.files[0].name == "gain_scan.csv");

    std::istringstream in(art.files[0].content);
    std::string line;
    std::getline(in, line);
    CHECK(line == "x_f_m,x_f_lambda,peak_field_vpm,gain_db,peak_loc_m");
    std::vector<std::pair<double, double>> rows;
    while (std::getline(in, line))
    {
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> v;
        while (std::getline(ls, cell, ','))
            v.push_back(std::stod(cell));
        REQUIRE(v.size() == 5);
        rows.emplace_back(v[1], v[3]);
    }
    REQUIRE(rows.size() == 141);
    const auto lo = std::min_element(rows.begin(), rows.end(),
                                     [](const auto &a, const auto &b) { return a.second < b.second; });
    CHECK(lo->first == 0.0);
}

TEST_CASE("closed-form table stays close to the integral")
{
    const auto el = build_full_circle({});
    std::vector<double> deltas;
    for (int i = 0; i <= 200; ++i)
        deltas.push_back(i * 0.01);
    const auto rows = closed_form_table(el, deltas, default_margin_lambda, 2);
    double worst = 0.0;
    for (const auto &r : rows)
        worst = std::max(worst, std::abs(r.eq4_norm - r.quadrature_norm));
    CHECK(worst < 1e-3);
}

TEST_CASE("artifacts do not depend on the thread count")
{
    for (const auto e : {Experiment::Map, Experiment::ScanWidth, Experiment::ScanSll, Experiment::ClosedForm})
    {
        ExperimentSpec s;
        s.experiment = e;
        s.array.radius_m = 0.6;
        s.grid_step_lambda = 0.25;
        s.scan_step_lambda = 0.5;
        s.delta_max_lambda = 1.0;
        s.delta_step_lambda = 0.05;
        s.threads = 1;
        const auto a = compute_artifacts(s);
        s.threads = 4;
        const auto b = compute_artifacts(s);
        REQUIRE(a.files.size() == b.files.size());
        for (std::size_t i = 0; i < a.files.size(); ++i)
        {
            CHECK(a.files[i].name == b.files[i].name);
            CHECK(a.files[i].content == b.files[i].content);
        }
    }
}

TEST_CASE("run writes artifacts and a manifest with matching digests")
{
    const auto dir = scratch_dir("manifest");
    ExperimentSpec s;
    s.experiment = Experiment::NfFf;
    s.radii_lambda = {2, 3};
    s.angular_step_deg = 0.1;
    s.output_dir = dir.string();
    const auto m = run(s);
    CHECK(m.status == status_ok);
    CHECK(m.tool_version == tool_version);
    REQUIRE(m.outputs.size() == 1);
    for (const auto &o : m.outputs)
    {
        const auto bytes = slurp(dir / o.name);
        CHECK(bytes.size() == o.bytes);
        CHECK(sha256_hex(bytes) == o.sha256);
    }
    const auto manifest = slurp(dir / "manifest.json");
    CHECK_THAT(manifest, Catch::Matchers::ContainsSubstring(m.outputs[0].sha256));
    CHECK(equivalent(parse_config(m.spec_text), s));
    fs::remove_all(dir);
}

TEST_CASE("sha256 of known strings")
{
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("csv number formatting")
{
    CHECK(csv::format_number(0.1) == "0.1");
    CHECK(csv::format_number(-0.0) == "0");
    CHECK(csv::format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(csv::format_number(std::nan("")) == "nan");
    CHECK(csv::format_number(-INFINITY) == "-inf");
}

TEST_CASE("experiment names")
{
    for (const auto *n : {"map", "scan-gain", "scan-width", "scan-sll", "nf-ff", "closed-form", "validate"})
        CHECK(to_string(parse_experiment(n)) == n);
    CHECK_THROWS_AS(parse_experiment("scan"), std::invalid_argument);
}
