// SPDX-License-Identifier: Apache-2.0
//
// fbharm - spherical-harmonic expansion of Fisher-Bingham (FB5) distributions
// Copyright (C) 2026 The fbharm authors
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

#ifndef FBHARM_DETAIL_REAL_HPP
#define FBHARM_DETAIL_REAL_HPP

// Thin overload set so numerical kernels can be written once for double and binary128.

#include <cmath>
#include <limits>
#include <quadmath.h>

namespace fbharm::detail
{
    using quad = __float128;

    template <class T>
    struct real_traits;

    template <>
    struct real_traits<double>
    {
        static constexpr double epsilon = std::numeric_limits<double>::epsilon();
        static constexpr double rescale = 1.0e200;
        static double pi() { return M_PI; }
    };

    template <>
    struct real_traits<quad>
    {
        static constexpr quad epsilon = FLT128_EPSILON;
        static constexpr quad rescale = 1.0e200; // range of binary128 is far larger; same threshold is fine
        static quad pi() { return M_PIq; }
    };

    namespace fp
    {
        inline double abs(double x) { return std::fabs(x); }
        inline double sqrt(double x) { return std::sqrt(x); }
        inline double expm1(double x) { return std::expm1(x); }
        inline double log(double x) { return std::log(x); }

        inline quad abs(quad x) { return fabsq(x); }
        inline quad sqrt(quad x) { return sqrtq(x); }
        inline quad expm1(quad x) { return expm1q(x); }
        inline quad log(quad x) { return logq(x); }
    }
}

#endif
