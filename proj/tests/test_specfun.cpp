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

#include "doctest.h"

#include "fbharm/specfun.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <stdexcept>

using namespace fbharm;

namespace
{
    double rel(double a, double b)
    {
        return std::fabs(a - b) / std::max(std::fabs(b), 1e-300);
    }
}

TEST_CASE("log_gamma against Boost")
{
    for (double x : {1e-3, 0.5, 1.0, 1.5, 2.0, 7.25, 33.0, 170.5, 1234.5})
        CHECK(std::fabs(log_gamma(x) - boost::math::lgamma(x)) <= 1e-13 * std::max(1.0, std::fabs(boost::math::lgamma(x))));
    CHECK(log_gamma(1.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-2.5), std::domain_error);
}

TEST_CASE("scaled half-integer Bessel I against Boost")
{
    for (double kappa : {0.25, 1.0, 10.0, 25.0, 50.0, 100.0, 200.0})
    {
        const int N = static_cast<int>(std::ceil(1.5 * kappa + 24));
        const ScaledBesselSeq seq = scaled_bessel_i_half(N, kappa);
        REQUIRE(seq.values.size() == static_cast<std::size_t>(N + 1));
        CHECK(seq.kappa == kappa);
        for (int n = 0; n <= N; n += 3)
        {
            const double ref = boost::math::cyl_bessel_i(n + 0.5, kappa) * std::exp(-kappa);
            if (ref < 1e-290)
                continue;
            INFO("kappa=" << kappa << " n=" << n);
            CHECK(rel(seq.values[n], ref) <= 1e-12);
        }
    }
}

TEST_CASE("scaled spherical Bessel i")
{
    const auto at0 = scaled_sph_bessel_i(5, 0.0);
    CHECK(at0[0] == 1.0);
    for (int n = 1; n <= 5; ++n)
        CHECK(at0[n] == 0.0);

    for (double kappa : {0.1, 3.0, 25.0, 100.0})
    {
        const auto v = scaled_sph_bessel_i(40, kappa);
        for (int n = 0; n <= 40; n += 5)
        {
            const double ref = std::sqrt(M_PI / (2.0 * kappa)) * boost::math::cyl_bessel_i(n + 0.5, kappa) * std::exp(-kappa);
            if (ref < 1e-290)
                continue;
            CHECK(rel(v[n], ref) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(scaled_sph_bessel_i(3, -1.0), std::domain_error);
    CHECK_THROWS_AS(scaled_bessel_i_half(-1, 1.0), std::domain_error);
}

TEST_CASE("spherical Bessel j against Boost")
{
    for (double x : {0.0, 1e-8, 0.3, 1.0, 6.0, 25.0, 80.0, 150.0})
    {
        const auto seq = spherical_bessel_j_seq(120, x);
        REQUIRE(seq.size() == 121);
        for (int ell = 0; ell <= 120; ell += 7)
        {
            const double ref = boost::math::sph_bessel(ell, x);
            INFO("x=" << x << " ell=" << ell);
            CHECK(std::fabs(seq[ell] - ref) <= 1e-14 * std::max(1.0, std::fabs(ref)) + 1e-300);
            CHECK(std::fabs(spherical_bessel_j(ell, x) - ref) <= 1e-14 * std::max(1.0, std::fabs(ref)) + 1e-300);
        }
    }
    CHECK(spherical_bessel_j(0, 0.0) == 1.0);
    CHECK(spherical_bessel_j(3, 0.0) == 0.0);
    CHECK_THROWS_AS(spherical_bessel_j(-1, 1.0), std::domain_error);
    CHECK_THROWS_AS(spherical_bessel_j(2, -1.0), std::domain_error);
}

TEST_CASE("G integral against adaptive quadrature")
{
    using boost::math::quadrature::gauss_kronrod;
    for (int p = 0; p <= 9; ++p)
        for (int q = -6; q <= 6; ++q)
        {
            const double re = gauss_kronrod<double, 61>::integrate(
                [&](double t) { return std::pow(std::sin(t), p) * std::cos(q * t); }, 0.0, M_PI, 12, 1e-15);
            const double im = gauss_kronrod<double, 61>::integrate(
                [&](double t) { return std::pow(std::sin(t), p) * std::sin(q * t); }, 0.0, M_PI, 12, 1e-15);
            const auto g = g_integral(p, q);
            INFO("p=" << p << " q=" << q);
            CHECK(std::fabs(g.real() - re) <= 1e-13);
            CHECK(std::fabs(g.imag() - im) <= 1e-13);
        }
}

TEST_CASE("G integral parity zeros")
{
    // p + q even with |q| > p gives an exact zero
    CHECK(g_integral(2, 4) == std::complex<double>(0.0, 0.0));
    CHECK(g_integral(1, -3) == std::complex<double>(0.0, 0.0));
    CHECK(g_integral(0, 0).real() == doctest::Approx(M_PI));
    CHECK_THROWS_AS(g_integral(-1, 0), std::domain_error);
}
