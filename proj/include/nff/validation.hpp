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

#ifndef NFF_VALIDATION_HPP
#define NFF_VALIDATION_HPP

#include <string>
#include <vector>

namespace nff
{

struct ValidationCheck
{
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

// Desk-scale self-check of the reference results: centre field identity,
// 3 dB width, half-circle centre/edge ratio, J0 and quadrature oracles,
// Bessel agreement, centre sidelobe level and centre gain minimum.
std::vector<ValidationCheck> run_validation(int threads = 0);

// One line per check plus a summary line.
std::string render_validation_report(const std::vector<ValidationCheck> &checks);

} // namespace nff

#endif
