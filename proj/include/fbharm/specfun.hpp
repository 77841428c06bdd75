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

#ifndef FBHARM_SPECFUN_HPP
#define FBHARM_SPECFUN_HPP

#include <complex>
#include <vector>

// Scalar special functions used by the closed-form expansions.
// All functions are pure; domain violations throw std::domain_error.

namespace fbharm
{
    // ln Gamma(x) for x > 0.
    double log_gamma(double x);

    // Exponentially scaled half-integer modified Bessel functions e^{-kappa} I_{n+1/2}(kappa), n = 0..N.
    struct ScaledBesselSeq
    {
        double kappa = 0.0;
        std::vector<double> values;
    };

    // Downward (Miller) recurrence seeded by a continued fraction and normalised against the
    // closed form of order 1/2. Valid for 0 <= kappa <= 200.
    ScaledBesselSeq scaled_bessel_i_half(int N, double kappa);

    // Exponentially scaled modified spherical Bessel functions e^{-kappa} i_n(kappa), n = 0..N,
    // where i_n(x) = sqrt(pi / (2x)) I_{n+1/2}(x). Finite at kappa = 0 (i_0(0) = 1).
    std::vector<double> scaled_sph_bessel_i(int N, double kappa);

    // Spherical Bessel function of the first kind j_ell(x), x >= 0.
    double spherical_bessel_j(int ell, double x);

    // j_0(x) .. j_lmax(x) from a single downward sweep.
    std::vector<double> spherical_bessel_j_seq(int lmax, double x);

    // G(p, q) = int_0^pi sin^p(theta) e^{i q theta} d theta, evaluated from the Gamma-function identity.
    // Reciprocal Gamma is treated as entire, so parity-forbidden (p, q) return exactly 0.
    std::complex<double> g_integral(int p, int q);
}

#endif
