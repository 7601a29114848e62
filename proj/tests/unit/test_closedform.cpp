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
#include "nff/closedform.hpp"
#include "nff/field.hpp"

#include <cmath>
#include <random>

using namespace nff;
using Catch::Approx;

namespace
{

constexpr double lambda = 0.2;
const double ln_edge = std::log((std::sqrt(2.0) + 1.0) / (std::sqrt(2.0) - 1.0));

ElementSet full(int n, double rc) { return build_full_circle({ArrayKind::FullCircle, n, rc, lambda, 1.0}); }
ElementSet half(int n, double rc) { return build_half_circle({ArrayKind::HalfCircle, n, rc, lambda, 1.0}); }

} // namespace

TEST_CASE("bessel_field normalisation, first null and half-power width")
{
    CHECK(bessel_field(0.0, lambda) == 1.0);
    // first zero 2.404825557695773 -> 0.382739874781 lambda (oracle)
    CHECK(bessel_field(0.382739874781 * lambda, lambda) < 1e-10);
    // |J0| = 1/sqrt2 at x = 1.1263642393773 -> full width 0.358532872838 lambda
    const double half_width = 0.5 * 0.358532872838 * lambda;
    CHECK(bessel_field(half_width, lambda) == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(std::abs(2.0 * half_width / lambda - 0.36) < 0.005);

    CHECK(bessel_regime_ok(0.2, 1.5));
    CHECK_FALSE(bessel_regime_ok(0.31, 1.5));
}

TEST_CASE("taylor_field_sum is normalised and tracks the direct sum")
{
    const double rc = 7.5 * lambda;
    const auto el = full(120, rc);
    CHECK(taylor_field_sum(0.0, el) == 1.0);
    const FocalSpec centre{{0.0, 0.0}};
    const double e0 = std::abs(field_at({0, 0}, el, centre));
    for (int i = 0; i <= 200; ++i)
    {
        const double d = i * 0.01 * lambda;
        const double direct = std::abs(field_at({d, 0.0}, el, centre)) / e0;
        const double taylor = taylor_field_sum(d, el);
        // The dropped second-order phase term grows as delta^2 / r_c.
        CHECK(std::abs(taylor - direct) <= 0.035);
        CHECK(std::abs(taylor - bessel_field(d, lambda)) <= 0.06);
    }
    // tests/oracles/derive_expected.py, taylor_values()
    CHECK(taylor_field_sum(0.3 * lambda, el) == Approx(0.2912197057489689).epsilon(1e-9));
    CHECK(taylor_field_sum(1.7 * lambda, el) == Approx(0.2312499047275672).epsilon(1e-9));
    CHECK_THROWS_AS(taylor_field_sum(0.1, half(10, 1.0)), std::invalid_argument);
}

TEST_CASE("amplitude_sum_at limits")
{
    CHECK(amplitude_sum_at({0, 0}, full(120, 1.5)) == Approx(80.0).epsilon(1e-13));

    const auto h = half(10000, 1.0);
    const double per = pi / 10000.0; // element density -> integral
    CHECK(amplitude_sum_at({0, 0}, h) * per == Approx(pi).epsilon(1e-3));
    CHECK(amplitude_sum_at({-1.0 + 1e-6, 0.0}, h) * per == Approx(ln_edge).epsilon(1e-3));

    const auto el = full(4, 1.0);
    CHECK_THROWS_AS(amplitude_sum_at(el.positions()[0], el), std::domain_error);
}

TEST_CASE("arc_integral closed forms")
{
    CHECK(arc_integral({0, 0}, 2.0, 0.0, two_pi) == Approx(two_pi / 2.0).epsilon(1e-12));
    CHECK(std::abs(arc_integral({0, 0}, 1.0, -pi / 2, pi / 2) - pi) <= 1e-9);
    // sec antiderivative: 2 ln(sec(pi/4) + tan(pi/4)) = 1.7627471740390861
    CHECK(std::abs(arc_integral({-1.0, 0.0}, 1.0, -pi / 2, pi / 2) - 1.7627471740390861) <= 1e-9);

    CHECK_THROWS_AS(arc_integral({1.0, 0.0}, 1.0, -pi / 2, pi / 2), std::domain_error);
    // Close to, but not on, the arc: still converges.
    const double near = arc_integral({0.999, 0.0}, 1.0, -pi / 2, pi / 2);
    CHECK(std::isfinite(near));
    CHECK(near > arc_integral({0.9, 0.0}, 1.0, -pi / 2, pi / 2));
}

TEST_CASE("element sums converge to the arc integral")
{
    const int n = 10000;
    const auto h = half(n, 1.0);
    const auto f = full(n, 1.0);
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> r(0.0, 0.9), a(0.0, two_pi);
    for (int i = 0; i < 25; ++i)
    {
        const Point2 p = rotate({r(rng), 0.0}, a(rng));
        const double sum_h = amplitude_sum_at(p, h) / n;
        const double int_h = arc_integral(p, 1.0, -pi / 2, pi / 2) / pi;
        CHECK(std::abs(sum_h - int_h) / int_h < 1e-3);
        const double sum_f = amplitude_sum_at(p, f) / n;
        const double int_f = arc_integral(p, 1.0, 0.0, two_pi) / two_pi;
        CHECK(std::abs(sum_f - int_f) / int_f < 1e-3);
    }
}

TEST_CASE("center_edge_ratio")
{
    const auto a = center_edge_ratio(1.0);
    const auto b = center_edge_ratio(3.7);
    CHECK(a.ratio == Approx(b.ratio).epsilon(1e-15));
    CHECK(a.ratio > 1.0);
    CHECK(a.ratio == Approx(1.7822139781913691).epsilon(1e-14));
    CHECK(a.ratio_db == Approx(2.50959845587).epsilon(1e-10));
    CHECK(std::abs(a.ratio_db - 2.5) < 0.05);
    CHECK(a.center_field == Approx(pi));
    CHECK(b.edge_field == Approx(ln_edge / 3.7));
    // Cross-check against the quadrature route.
    CHECK(arc_integral({0, 0}, 1.0, -pi / 2, pi / 2) / arc_integral({-1, 0}, 1.0, -pi / 2, pi / 2) ==
          Approx(a.ratio).epsilon(1e-9));
    CHECK_THROWS_AS(center_edge_ratio(0.0), std::invalid_argument);
}

TEST_CASE("closed-form table rows")
{
    const auto el = full(120, 7.5 * lambda);
    std::vector<double> deltas;
    for (int i = 0; i <= 200; ++i)
        deltas.push_back(i * 0.01);
    const auto rows = closed_form_table(el, deltas, default_margin_lambda, 2);
    REQUIRE(rows.size() == deltas.size());
    CHECK(rows[0].eq1_norm == Approx(1.0));
    CHECK(rows[0].eq3_norm == 1.0);
    CHECK(rows[0].eq4_norm == 1.0);
    CHECK(rows[0].quadrature_norm == Approx(1.0).epsilon(1e-12));
    double worst = 0.0;
    for (const auto &r : rows)
        worst = std::max(worst, std::abs(r.eq4_norm - r.quadrature_norm));
    CHECK(worst < 1e-3);
}
