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
#include "nff/field.hpp"

#include <cmath>
#include <random>

using namespace nff;
using Catch::Approx;

namespace
{

constexpr double lambda = 0.2;

ElementSet full(int n, double rc) { return build_full_circle({ArrayKind::FullCircle, n, rc, lambda, 1.0}); }
ElementSet half(int n, double rc) { return build_half_circle({ArrayKind::HalfCircle, n, rc, lambda, 1.0}); }

} // namespace

TEST_CASE("single element at the focal point gives 1 V/m")
{
    const ElementSet el({ArrayKind::FullCircle, 1, 1.0, lambda, 1.0}, {0.0});
    const Complex e = field_at({0.0, 0.0}, el, FocalSpec{{0.0, 0.0}});
    CHECK(e.real() == Approx(1.0).epsilon(1e-15));
    CHECK(e.imag() == Approx(0.0).margin(1e-15));
}

TEST_CASE("centre focus of the reference array adds up in phase")
{
    const Complex e = field_at({0.0, 0.0}, full(120, 1.5), FocalSpec{{0.0, 0.0}});
    CHECK(std::abs(e) == Approx(80.0).epsilon(1e-12));
    CHECK(std::arg(e) == Approx(0.0).margin(1e-12));
}

TEST_CASE("four-element sum matches the term-by-term oracle")
{
    // tests/oracles/derive_expected.py, four_element_value()
    const Complex e = field_at({0.05, 0.0}, full(4, 1.0), FocalSpec{{0.0, 0.0}});
    CHECK(e.real() == Approx(1.9959665957955335).epsilon(1e-12));
    CHECK(e.imag() == Approx(0.021877888166900138).epsilon(1e-12));
}

TEST_CASE("coincident observation point names the element")
{
    const auto el = full(4, 1.0);
    CHECK_THROWS_AS(field_at(el.positions()[2], el, FocalSpec{{0.0, 0.0}}), std::domain_error);
    CHECK_THROWS_WITH(field_at(el.positions()[2], el, FocalSpec{{0.0, 0.0}}),
                      Catch::Matchers::ContainsSubstring("element 3"));
}

TEST_CASE("field invariants over random configurations")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> n_dist(8, 200);
    std::uniform_real_distribution<double> rc_dist(1.0, 3.0), unit(-1.0, 1.0);

    for (int trial = 0; trial < 40; ++trial)
    {
        const int n = n_dist(rng);
        const double rc = rc_dist(rng);
        const auto el = trial % 2 ? full(n, rc) : half(n, rc);
        const auto region = ValidityRegion::for_array(el.config());
        const Point2 f{0.5 * rc * unit(rng), 0.5 * rc * unit(rng)};
        const FocalSpec focal{f};

        // Focal value identity: |E(r_f)| = E0 * sum 1/|r_f - r_n|.
        const double ef = std::abs(field_at(f, el, focal));
        CHECK(ef == Approx(amplitude_sum_at(f, el)).epsilon(1e-12));

        // Maximality in a 0.5 lambda neighbourhood.
        for (int k = 0; k < 30; ++k)
        {
            const Point2 p{f.x + 0.5 * lambda * unit(rng), f.y + 0.5 * lambda * unit(rng)};
            if (distance(p, f) <= 0.5 * lambda && is_valid_point(p, region, el))
                CHECK(std::abs(field_at(p, el, focal)) <= ef * (1.0 + 1e-12));
        }

        // Linearity in E0.
        const Point2 p{f.x + 0.1 * lambda, f.y};
        const Complex e1 = field_at(p, el, focal, lambda, 1.0);
        const Complex e2 = field_at(p, el, focal, lambda, 2.0);
        CHECK(std::abs(e2) == 2.0 * std::abs(e1));

        // Rotation covariance for full circles.
        if (el.config().kind == ArrayKind::FullCircle)
        {
            const double rot = two_pi / n * (1 + trial % 3);
            const Complex a = field_at(p, el, focal);
            const Complex b = field_at(rotate(p, rot), el, FocalSpec{rotate(f, rot)});
            CHECK(std::abs(b) == Approx(std::abs(a)).epsilon(1e-9));
        }
    }
}

TEST_CASE("a full circle focused on the x-axis is mirror symmetric in y")
{
    const auto el = full(120, 1.5);
    const FocalSpec focal{{0.37, 0.0}};
    for (const Point2 p : {Point2{0.03, 0.2}, Point2{-0.5, 0.11}, Point2{0.9, 0.4}})
    {
        const double a = std::abs(field_at(p, el, focal));
        const double b = std::abs(field_at({p.x, -p.y}, el, focal));
        CHECK(a == Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("field_line masks the annulus and is symmetric about the centre")
{
    const double rc = 7.5 * lambda;
    const auto el = full(120, rc);
    const auto region = ValidityRegion::for_array(el.config());
    const auto line = field_line(Axis::X, -rc, rc, lambda / 20.0, el, FocalSpec{{0.0, 0.0}}, region, 2);
    REQUIRE(line.size() == 301);
    for (std::size_t i = 0; i < line.size(); ++i)
    {
        const auto &s = line[i];
        const auto &mirror = line[line.size() - 1 - i];
        CHECK(s.valid == mirror.valid);
        if (std::abs(s.point.x) > rc - 0.2 * lambda + 1e-12)
        {
            CHECK_FALSE(s.valid);
            CHECK(s.value == Complex{0.0, 0.0});
        }
        else
        {
            CHECK(std::abs(s.value) == Approx(std::abs(mirror.value)).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(field_line(Axis::X, 1.0, 1.0, 0.1, el, FocalSpec{}, region), std::invalid_argument);
}

TEST_CASE("field_line along y passes through the focal point")
{
    const auto el = full(60, 1.0);
    const auto region = ValidityRegion::for_array(el.config());
    const auto line = field_line(Axis::Y, -0.2, 0.2, 0.1, el, FocalSpec{{0.3, 0.0}}, region);
    REQUIRE(line.size() == 5);
    for (const auto &s : line)
        CHECK(s.point.x == 0.3);
    CHECK(std::abs(line[2].value) == Approx(amplitude_sum_at({0.3, 0.0}, el)).epsilon(1e-12));
}

TEST_CASE("field_map reports the peak, masks, and an explicit no-peak outcome")
{
    const auto el = full(120, 1.5);
    const auto region = ValidityRegion::for_array(el.config());
    const auto grid = GridSpec::covering_aperture(1.5, 0.05);
    CHECK(grid.nx == 61);
    const auto map = field_map(grid, el, FocalSpec{{0.0, 0.0}}, region, 3);
    REQUIRE(map.samples.size() == grid.nx * grid.ny);
    REQUIRE(map.peak.has_value());
    CHECK(map.peak->magnitude == Approx(80.0).epsilon(1e-12));
    CHECK(map.peak->location.norm() < 1e-12);
    for (const auto &s : map.samples)
        if (!s.valid)
            CHECK(s.value == Complex{0.0, 0.0});

    // Grid restricted to the exclusion annulus: nothing valid.
    const GridSpec annulus{{1.49, -0.01}, 0.01, 2, 2};
    const auto empty = field_map(annulus, el, FocalSpec{{0.0, 0.0}}, region);
    CHECK_FALSE(empty.peak.has_value());

    CHECK_THROWS_AS(field_map(GridSpec{{0, 0}, 0.1, 0, 4}, el, FocalSpec{}, region), std::invalid_argument);
}

TEST_CASE("field map is bitwise independent of the thread count")
{
    const auto el = half(40, 1.0);
    const auto region = ValidityRegion::for_array(el.config());
    const auto grid = GridSpec::covering_aperture(1.0, 0.04);
    const auto a = field_map(grid, el, FocalSpec{{0.2, 0.1}}, region, 1);
    const auto b = field_map(grid, el, FocalSpec{{0.2, 0.1}}, region, 4);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        REQUIRE(a.samples[i].value == b.samples[i].value);
}

TEST_CASE("central lobe shape does not depend on N once spacing is fine enough")
{
    const double rc = 1.5;
    const auto e80 = full(80, rc), e120 = full(120, rc);
    const FocalSpec c{{0.0, 0.0}};
    const double n80 = std::abs(field_at({0, 0}, e80, c)), n120 = std::abs(field_at({0, 0}, e120, c));
    for (double x = -0.5 * lambda; x <= 0.5 * lambda; x += 0.05 * lambda)
        for (double y = -0.5 * lambda; y <= 0.5 * lambda; y += 0.05 * lambda)
        {
            const double a = std::abs(field_at({x, y}, e80, c)) / n80;
            const double b = std::abs(field_at({x, y}, e120, c)) / n120;
            CHECK(std::abs(a - b) <= 0.01);
        }
}

TEST_CASE("grating lobes appear for sparse arrays")
{
    const auto region_for = [](const ElementSet &e) { return ValidityRegion::for_array(e.config()); };
    const auto grid = GridSpec::covering_aperture(1.5, lambda / 20.0);

    const auto sparse = full(20, 1.5);
    const auto m20 = field_map(grid, sparse, FocalSpec{{0, 0}}, region_for(sparse), 4);
    const double focal20 = std::abs(field_at({0, 0}, sparse, FocalSpec{{0, 0}}));
    int strong = 0;
    for (const auto &p : local_maxima(m20))
        strong += p.magnitude >= focal20 / std::sqrt(2.0) ? 1 : 0;
    CHECK(strong > 1);

    const auto dense = full(120, 1.5);
    const auto m120 = field_map(grid, dense, FocalSpec{{0, 0}}, region_for(dense), 4);
    strong = 0;
    for (const auto &p : local_maxima(m120))
        strong += p.magnitude >= 80.0 / std::sqrt(2.0) ? 1 : 0;
    CHECK(strong == 1);
}
