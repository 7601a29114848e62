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

#include "nff/bessel.hpp"
#include "nff/geometry.hpp"
#include "nff/quadrature.hpp"

#include <cmath>
#include <complex>
#include <limits>

using namespace nff;
using Catch::Approx;

TEST_CASE("Gauss-Kronrod integrates smooth functions to the requested tolerance")
{
    const auto poly = integrate<double>([](double x) { return x * x * x - 2.0 * x; }, 0.0, 2.0);
    CHECK(poly.converged);
    CHECK(poly.value == Approx(0.0).margin(1e-13));

    const auto e = integrate<double>([](double x) { return std::exp(x); }, 0.0, 1.0);
    CHECK(e.value == Approx(std::exp(1.0) - 1.0).epsilon(1e-14));

    // Integrable endpoint singularity needs subdivision.
    const auto s = integrate<double>([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                     QuadratureOptions{1e-10, 1e-300, 20000});
    CHECK(s.value == Approx(2.0).epsilon(1e-9));
    CHECK(s.intervals > 10);

    const auto osc = integrate<std::complex<double>>(
        [](double t) { return std::polar(1.0, 30.0 * t); }, 0.0, two_pi);
    CHECK(std::abs(osc.value) < 1e-12);
}

TEST_CASE("j0 closed values")
{
    CHECK(nff::j0(0.0) == 1.0);
    CHECK(nff::j0(-1.0) == nff::j0(1.0));
    // first zero, published and confirmed by the quadrature oracle
    CHECK(std::abs(nff::j0(2.404826)) < 1e-6);
    CHECK(std::abs(nff::j0(2.404825557695773)) < 1e-14);
    // first extremum
    CHECK(nff::j0(3.8317059702075) == Approx(-0.40275939570255).epsilon(1e-12));
    CHECK_THROWS_AS(nff::j0(std::numeric_limits<double>::infinity()), std::domain_error);
    CHECK_THROWS_AS(nff::j0(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("j0 against mpmath reference values")
{
    // tests/oracles/derive_expected.py, bessel_values()
    const std::pair<double, double> ref[] = {
        {0.5, 0.9384698072408129},    {1.0, 0.76519768655796655},  {5.0, -0.1775967713143383},
        {10.0, -0.24593576445134834}, {20.0, 0.16702466434058315}, {50.0, 0.055812327669251815},
        {100.0, 0.019985850304223122}};
    for (auto [x, v] : ref)
        CHECK(std::abs(nff::j0(x) - v) < 1e-12);
}

TEST_CASE("j0 matches std::cyl_bessel_j across all three evaluation regimes")
{
    double worst = 0.0;
    for (int i = 0; i <= 10000; ++i)
    {
        const double x = 0.01 * i;
        worst = std::max(worst, std::abs(nff::j0(x) - std::cyl_bessel_j(0.0, x)));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("j0 equals its integral representation")
{
    double worst = 0.0;
    for (int i = 0; i < 50; ++i)
    {
        const double x = 20.0 * i / 49.0;
        const auto r = integrate<double>([x](double t) { return std::cos(x * std::sin(t)); }, 0.0, pi,
                                         QuadratureOptions{1e-13, 1e-15, 20000});
        worst = std::max(worst, std::abs(nff::j0(x) - r.value / pi));
    }
    CHECK(worst <= 1e-9);
}
