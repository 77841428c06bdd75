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

#ifndef FBHARM_DETAIL_MOD_SPH_BESSEL_HPP
#define FBHARM_DETAIL_MOD_SPH_BESSEL_HPP

#include "detail/real.hpp"

#include <stdexcept>
#include <vector>

namespace fbharm::detail
{
    // Ratio i_{N+1}(x) / i_N(x) from the continued fraction
    //   1 / ((2N+3)/x + 1 / ((2N+5)/x + ...)), evaluated with the modified Lentz method.
    template <class T>
    T mod_sph_bessel_ratio(int N, T x)
    {
        const T tiny = T(1.0e-300);
        const T eps = real_traits<T>::epsilon;

        T f = T(2 * N + 3) / x;
        if (f == T(0))
            f = tiny;
        T C = f, D = T(0);
        for (int j = 1; j < 1000000; ++j)
        {
            const T b = T(2 * (N + j) + 3) / x;
            D = b + D;
            if (D == T(0))
                D = tiny;
            C = b + T(1) / C;
            if (C == T(0))
                C = tiny;
            D = T(1) / D;
            const T delta = C * D;
            f *= delta;
            if (fp::abs(delta - T(1)) < eps)
                return T(1) / f;
        }
        throw std::runtime_error("mod_sph_bessel_ratio: continued fraction did not converge");
    }

    // e^{-x} i_n(x) for n = 0..N. Downward recurrence i_{n-1} = i_{n+1} + (2n+1)/x i_n started from the
    // continued-fraction ratio at the top, normalised with e^{-x} i_0(x) = -expm1(-2x) / (2x).
    template <class T>
    std::vector<T> scaled_mod_sph_bessel(int N, T x)
    {
        std::vector<T> v(static_cast<std::size_t>(N) + 1, T(0));
        if (x == T(0))
        {
            v[0] = T(1);
            return v;
        }

        const T big = real_traits<T>::rescale;
        T upper = mod_sph_bessel_ratio<T>(N, x); // i_{N+1} in units of i_N
        v[N] = T(1);
        for (int n = N; n >= 1; --n)
        {
            const T lower = upper + T(2 * n + 1) / x * v[n];
            upper = v[n];
            v[n - 1] = lower;
            if (fp::abs(lower) > big)
            {
                for (int k = n - 1; k <= N; ++k)
                    v[k] /= big;
                upper /= big;
            }
        }

        const T i0 = -fp::expm1(T(-2) * x) / (T(2) * x);
        const T scale = i0 / v[0];
        for (auto &e : v)
            e *= scale;
        return v;
    }
}

#endif
