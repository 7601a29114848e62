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

#ifndef NFF_QUADRATURE_HPP
#define NFF_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

namespace nff
{

struct QuadratureOptions
{
    double rel_tol = 1e-10;
    double abs_tol = 1e-300;
    std::size_t max_intervals = 20000;
};

template <typename T>
struct QuadratureResult
{
    T value{};
    double error_estimate = 0.0;
    std::size_t intervals = 0;
    bool converged = false;
};

namespace detail
{

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct Segment
{
    double a, b;
    T value;
    double error;
    bool operator<(const Segment &o) const { return error < o.error; }
};

template <typename T, typename F>
Segment<T> gauss_kronrod_15(F &f, double a, double b)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const T fc = f(centre);
    T kronrod = fc * kronrod_weights[7];
    T gauss = fc * gauss_weights[3];
    for (std::size_t j = 0; j < 7; ++j)
    {
        const double dx = half * kronrod_nodes[j];
        const T sum = f(centre - dx) + f(centre + dx);
        kronrod += kronrod_weights[j] * sum;
        if (j % 2 == 1)
            gauss += gauss_weights[j / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace detail

// Globally adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b]: the
// segment with the largest error estimate is bisected until the summed
// estimate meets max(abs_tol, rel_tol * |I|) or the interval budget runs out.
// T is double or std::complex<double>.
template <typename T, typename F>
QuadratureResult<T> integrate(F &&f, double a, double b, const QuadratureOptions &opts = {})
{
    using detail::Segment;
    std::priority_queue<Segment<T>> heap;
    auto first = detail::gauss_kronrod_15<T>(f, a, b);
    T total = first.value;
    double error = first.error;
    heap.push(first);

    auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
    while (error > target() && heap.size() < opts.max_intervals)
    {
        const Segment<T> worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
        {
            heap.push(worst);
            break;
        }
        auto left = detail::gauss_kronrod_15<T>(f, worst.a, mid);
        auto right = detail::gauss_kronrod_15<T>(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum from the segments to drop accumulated update round-off.
    T sum{};
    double err = 0.0;
    const std::size_t n = heap.size();
    std::vector<Segment<T>> segs;
    segs.reserve(n);
    while (!heap.empty())
    {
        segs.push_back(heap.top());
        heap.pop();
    }
    std::sort(segs.begin(), segs.end(), [](const auto &l, const auto &r) { return l.a < r.a; });
    for (const auto &s : segs)
    {
        sum += s.value;
        err += s.error;
    }
    return {sum, err, n, err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(sum))};
}

} // namespace nff

#endif
