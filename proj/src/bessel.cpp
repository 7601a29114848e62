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

#include "nff/bessel.hpp"

#include "nff/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace nff
{
namespace
{

double j0_series(double x)
{
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k)
    {
        term *= -q / (static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < 1e-18)
            break;
    }
    return sum;
}

// Backward recurrence J_{k-1} = (2k/x) J_k - J_{k+1}, normalised with
// J_0 + 2 * sum_k J_{2k} = 1.
double j0_miller(double x)
{
    const int start = 2 * ((static_cast<int>(x) + 60) / 2);
    double next = 0.0; // J_{k+1}
    double curr = 1e-30; // J_k, arbitrary scale
    double norm = 0.0;
    for (int k = start; k >= 1; --k)
    {
        const double prev = (2.0 * k / x) * curr - next;
        next = curr;
        curr = prev;
        if ((k - 1) % 2 == 0 && k - 1 > 0)
            norm += 2.0 * curr;
        if (std::abs(curr) > 1e250)
        {
            curr *= 1e-250;
            next *= 1e-250;
            norm *= 1e-250;
        }
    }
    norm += curr;
    return curr / norm;
}

double j0_asymptotic(double x)
{
    double p = 0.0, q = 0.0;
    double a = 1.0; // a_k / x^k
    double last = std::abs(a);
    for (int k = 0; k < 200; ++k)
    {
        if (k > 0)
        {
            const double odd = 2.0 * k - 1.0;
            a *= odd * odd / (8.0 * k * x);
            if (std::abs(a) > last)
                break;
            last = std::abs(a);
        }
        // P = a0 - a2 + a4 - ..., Q = -a1 + a3 - ...
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0)
            p += sign * a;
        else
            q -= sign * a;
        if (std::abs(a) < 1e-18)
            break;
    }
    const double chi = x - pi / 4.0;
    return std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

} // namespace

double j0(double x)
{
    if (!std::isfinite(x))
        throw std::domain_error("j0: argument must be finite");
    const double ax = std::abs(x);
    if (ax < 8.0)
        return j0_series(ax);
    if (ax < 40.0)
        return j0_miller(ax);
    return j0_asymptotic(ax);
}

} // namespace nff
