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

#ifndef NFF_RUNNER_HPP
#define NFF_RUNNER_HPP

#include "nff/experiment.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nff
{

inline constexpr std::string_view tool_version = "0.1.0";

// Exit statuses of a run.
inline constexpr int status_ok = 0;
inline constexpr int status_numeric_failure = 3;

struct Artifact
{
    std::string name; // file name inside the output directory
    std::string content;
};

struct ArtifactSet
{
    std::vector<Artifact> files;
    std::vector<std::string> notes;    // informational (e.g. no-peak outcome)
    std::vector<std::string> failures; // numeric failures; run exits nonzero
};

// Runs the experiment in memory. Output bytes depend only on the spec, not on
// spec.threads.
ArtifactSet compute_artifacts(const ExperimentSpec &spec);

struct OutputFile
{
    std::string name;
    std::string sha256;
    std::size_t bytes = 0;
};

struct RunManifest
{
    std::string tool_version;
    std::string spec_text; // canonical config echo
    std::string experiment;
    std::string db_convention;
    std::vector<OutputFile> outputs;
    std::vector<std::string> notes;
    std::vector<std::string> failures;
    double wall_clock_seconds = 0.0;
    int status = status_ok;

    std::string to_json() const;
};

std::string sha256_hex(std::string_view data);

// Validates the spec, computes the experiment, writes every artifact and then
// manifest.json into spec.output_dir. Throws std::invalid_argument for an
// invalid spec and std::runtime_error for I/O failures.
RunManifest run(const ExperimentSpec &spec);

} // namespace nff

#endif
