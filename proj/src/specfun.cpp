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

#include "fbharm/specfun.hpp"

#include "detail/mod_sph_bessel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fbharm
{
    double log_gamma(double x)
    {
        if (!(x > 0.0))
            throw std::domain_error("log_gamma: argument must be positive, got " + std::to_string(x));
        return std::lgamma(x);
    }

    std::vector<double> scaled_sph_bessel_i(int N, double kappa)
    {
        if (N < 0)
            throw std::domain_error("scaled_sph_bessel_i: N must be non-negative");
        if (!(kappa >= 0.0))
            throw std::domain_error("scaled_sph_bessel_i: kappa must be non-negative");
        return detail::scaled_mod_sph_bessel<double>(N, kappa);
    }

    ScaledBesselSeq scaled_bessel_i_half(int N, double kappa)
    {
        if (N < 0)
            throw std::domain_error("scaled_bessel_i_half: N must be non-negative");
        if (!(kappa >= 0.0))
            throw std::domain_error("scaled_bessel_i_half: kappa must be non-negative");

        ScaledBesselSeq out;
        out.kappa = kappa;
        if (kappa == 0.0)
        {
            out.values.assign(static_cast<std::size_t>(N) + 1, 0.0);
            return out;
        }
        out.values = detail::scaled_mod_sph_bessel<double>(N, kappa);
        const double factor = std::sqrt(2.0 * kappa / M_PI); // I_{n+1/2} = sqrt(2x/pi) i_n
        for (auto &v : out.values)
            v *= factor;
        return out;
    }

    namespace
    {
        double sph_j0(double x)
        {
            return x == 0.0 ? 1.0 : std::sin(x) / x;
        }

        double sph_j1(double x)
        {
            if (x < 0.5)
            {
                // sum_k (-1)^k x^{2k+1} / (2^k k! (2k+3)!!)
                double term = x / 3.0, sum = term;
                const double x2 = x * x;
                for (int k = 1; k < 30; ++k)
                {
                    term *= -x2 / (2.0 * k * (2.0 * k + 3.0));
                    sum += term;
                    if (std::fabs(term) < 1.0e-18 * std::fabs(sum))
                        break;
                }
                return sum;
            }
            return (std::sin(x) / x - std::cos(x)) / x;
        }
    }

    std::vector<double> spherical_bessel_j_seq(int lmax, double x)
    {
        if (lmax < 0)
            throw std::domain_error("spherical_bessel_j: degree must be non-negative");
        if (!(x >= 0.0))
            throw std::domain_error("spherical_bessel_j: argument must be non-negative");

        std::vector<double> out(static_cast<std::size_t>(lmax) + 1, 0.0);
        if (x == 0.0)
        {
            out[0] = 1.0;
            return out;
        }
        const double j0 = sph_j0(x), j1 = sph_j1(x);
        out[0] = j0;
        if (lmax == 0)
            return out;
        out[1] = j1;
        if (lmax == 1)
            return out;

        // Miller: start well beyond both the requested degree and the turning point n ~ x.
        const int start = std::max(lmax, static_cast<int>(std::ceil(x))) + 20 + static_cast<int>(std::ceil(10.0 * std::cbrt(x)));
        const double big = 1.0e200;
        double upper = 0.0, cur = 1.0e-30;
        for (int n = start; n >= 1; --n)
        {
            const double lower = (2.0 * n + 1.0) / x * cur - upper;
            upper = cur;
            cur = lower;
            // cur now holds f_{n-1}, upper holds f_n
            if (n >= 2 && n <= lmax)
                out[n] = upper;
            if (std::fabs(cur) > big)
            {
                cur /= big;
                upper /= big;
                for (int k = n; k <= lmax; ++k)
                    out[k] /= big;
            }
        }
        const double f0 = cur, f1 = upper;

        const double scale = std::fabs(j0) >= std::fabs(j1) ? j0 / f0 : j1 / f1;
        for (int n = 2; n <= lmax; ++n)
            out[n] *= scale;
        return out;
    }

    double spherical_bessel_j(int ell, double x)
    {
        if (ell < 0)
            throw std::domain_error("spherical_bessel_j: degree must be non-negative");
        if (!(x >= 0.0))
            throw std::domain_error("spherical_bessel_j: argument must be non-negative");
        if (ell == 0)
            return sph_j0(x);
        if (ell == 1)
            return sph_j1(x);
        return spherical_bessel_j_seq(ell, x)[ell];
    }

    namespace
    {
        bool is_nonpositive_integer(double a)
        {
            return a <= 0.0 && a == std::floor(a);
        }

        // sign of Gamma(a) for a not a pole
        double gamma_sign(double a)
        {
            if (a > 0.0)
                return 1.0;
            return (static_cast<long>(std::ceil(-a)) % 2 == 0) ? 1.0 : -1.0;
        }
    }

    std::complex<double> g_integral(int p, int q)
    {
        if (p < 0)
            throw std::domain_error("g_integral: p must be non-negative");

        const double a = 0.5 * (p + q + 2);
        const double b = 0.5 * (p - q + 2);
        if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
            return {0.0, 0.0};

        const double log_mag = std::log(M_PI) + std::lgamma(p + 2.0) - p * std::log(2.0) - std::log(p + 1.0) - std::lgamma(a) - std::lgamma(b);
        const double mag = gamma_sign(a) * gamma_sign(b) * std::exp(log_mag);

        switch (((q % 4) + 4) % 4) // e^{i q pi / 2}
        {
        case 0:
            return {mag, 0.0};
        case 1:
            return {0.0, mag};
        case 2:
            return {-mag, 0.0};
        default:
            return {0.0, -mag};
        }
    }
}
