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

#ifndef NFF_BESSEL_HPP
#define NFF_BESSEL_HPP

namespace nff
{

// Zeroth-order Bessel function of the first kind. Absolute error below 1e-10
// for |x| <= 100 (power series below 8, Miller backward recurrence up to 40,
// Hankel asymptotic expansion beyond). Throws std::domain_error for
// non-finite x.
double j0(double x);

} // namespace nff

#endif
