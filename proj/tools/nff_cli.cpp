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

// nff <experiment> --config <file> [--out <dir>] [--db-convention field10|field20] [--threads N]

#include "nff/analysis.hpp"
#include "nff/experiment.hpp"
#include "nff/runner.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

int main(int argc, char **argv)
{
    CLI::App app{"Near-field focusing experiments for uniform circular arrays"};
    app.set_version_flag("--version", std::string(nff::tool_version));

    std::string experiment;
    std::string config_path;
    std::optional<std::string> out_dir;
    std::optional<std::string> db_convention;
    std::optional<int> threads;

    app.add_option("experiment", experiment, "map | scan-gain | scan-width | scan-sll | nf-ff | closed-form | validate")
        ->required();
    app.add_option("--config", config_path, "key = value config file (defaults: N=120, r_c=1.5 m, lambda=0.2 m)");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--db-convention", db_convention, "gain dB convention: field10 (10 log10|E|) or field20")
        ->check(CLI::IsMember({"field10", "field20"}));
    app.add_option("--threads", threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    nff::ExperimentSpec spec;
    try
    {
        if (!config_path.empty())
            spec = nff::load_config(config_path);
        spec.experiment = nff::parse_experiment(experiment);
        if (out_dir)
            spec.output_dir = *out_dir;
        if (db_convention)
            spec.db = nff::parse_db_convention(*db_convention);
        if (threads)
            spec.threads = *threads;
        spec.validate();
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "nff: invalid spec: " << e.what() << '\n';
        return 2;
    }

    try
    {
        const auto manifest = nff::run(spec);
        for (const auto &o : manifest.outputs)
            std::cout << fmt::format("wrote {} ({} bytes, sha256 {})\n",
                                     (std::filesystem::path(spec.output_dir) / o.name).string(), o.bytes, o.sha256);
        for (const auto &n : manifest.notes)
            std::cout << "note: " << n << '\n';
        if (spec.experiment == nff::Experiment::Validate)
        {
            std::ifstream report(std::filesystem::path(spec.output_dir) / "validation_report.txt");
            std::cout << report.rdbuf();
        }
        for (const auto &f : manifest.failures)
            std::cerr << "failure: " << f << '\n';
        return manifest.status;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "nff: invalid spec: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "nff: " << e.what() << '\n';
        return 1;
    }
}
