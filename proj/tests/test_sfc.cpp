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

#include "fbharm/errors.hpp"
#include "fbharm/sfc.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <random>

using namespace fbharm;

namespace
{
    constexpr double pi = M_PI;

    // von Mises-Fisher correlation: the integral of exp(a.x) over the sphere is 4 pi sinh(r) / r with r^2 = a.a,
    // here a = kappa mu + i k dz.
    cdouble vmf_rho(double kappa, const Vec3 &mu, const Vec3 &dz, double lambda)
    {
        const double k = 2.0 * pi / lambda;
        const cdouble r2 = cdouble(kappa * kappa - k * k * dot(dz, dz), 2.0 * kappa * k * dot(mu, dz));
        const cdouble r = std::sqrt(r2);
        // kappa / sinh(kappa) * sinh(r) / r, written with e^{-kappa} scaling
        const cdouble num = (std::exp(r - kappa) - std::exp(-r - kappa)) / r;
        return kappa * num / (1.0 - std::exp(-2.0 * kappa));
    }

    FB5Params vmf(double kappa, const Vec3 &mu, const Vec3 &eta1, const Vec3 &eta2)
    {
        FB5Params p = FB5Params::standard(kappa, 0.0);
        p.mu = mu;
        p.eta1 = eta1;
        p.eta2 = eta2;
        return p;
    }
}

TEST_CASE("uniform circular array")
{
    const ArrayGeometry g = uca_positions(16, 2.0);
    CHECK(g.size() == 16);
    for (int p = 1; p <= 16; ++p)
    {
        const Vec3 &z = g.element(p);
        CHECK(z[0] == doctest::Approx(2.0 * std::cos(2 * pi * p / 16)));
        CHECK(z[1] == doctest::Approx(2.0 * std::sin(2 * pi * p / 16)));
        CHECK(z[2] == 0.0);
    }
    CHECK(nearest_neighbor(g, 1) == 2);
    CHECK(nearest_neighbor(g, 16) == 1);
    CHECK_THROWS_AS(g.element(0), ConstraintError);
    CHECK_THROWS_AS(g.element(17), ConstraintError);
    CHECK_THROWS_AS(uca_positions(0, 1.0), ConstraintError);
    CHECK_THROWS_AS(uca_positions(4, -1.0), ConstraintError);
    CHECK_THROWS_AS(nearest_neighbor(uca_positions(1, 1.0), 1), ConstraintError);
}

TEST_CASE("regular dodecahedral array")
{
    const double R = 1.5;
    const ArrayGeometry g = rda_positions(R);
    REQUIRE(g.size() == 20);
    const double edge = 4.0 * R / (std::sqrt(3.0) * (1.0 + std::sqrt(5.0)));
    for (int p = 1; p <= 20; ++p)
    {
        CHECK(norm(g.element(p)) == doctest::Approx(R).epsilon(1e-14));
        int neighbours = 0;
        double closest = 1e300;
        for (int q = 1; q <= 20; ++q)
        {
            if (q == p)
                continue;
            const Vec3 &a = g.element(p), &b = g.element(q);
            const double d = norm({a[0] - b[0], a[1] - b[1], a[2] - b[2]});
            closest = std::min(closest, d);
            if (std::fabs(d - edge) <= 1e-12)
                ++neighbours;
        }
        CHECK(neighbours == 3);
        CHECK(closest == doctest::Approx(edge).epsilon(1e-12));
        const int n = nearest_neighbor(g, p);
        const Vec3 &a = g.element(p), &b = g.element(n);
        CHECK(norm({a[0] - b[0], a[1] - b[1], a[2] - b[2]}) == doctest::Approx(edge).epsilon(1e-12));
    }
    CHECK_THROWS_AS(rda_positions(0.0), ConstraintError);
}

TEST_CASE("steering phase")
{
    const Direction d(0.7, 1.1);
    const Vec3 z{0.3, -0.2, 0.5};
    const cdouble s = steering_phase(z, d, 0.5);
    CHECK(std::abs(s) == doctest::Approx(1.0));
    CHECK(std::arg(s) == doctest::Approx(std::remainder(4.0 * pi * dot(z, d.unit_vector()), 2.0 * pi)));
    CHECK_THROWS_AS(steering_phase(z, d, 0.0), ConstraintError);
}

TEST_CASE("degree cut-off bound")
{
    int last = 0;
    for (double kd : {0.0, 0.5, 3.0, 12.0, 40.0, 80.0})
    {
        const int L = ell_truncation(kd, 1e-14);
        CHECK(L >= static_cast<int>(std::ceil(std::exp(1.0) * kd / 2.0)) + 20);
        CHECK(L >= last);
        last = L;
        const double term = 4.0 * pi * std::fabs(boost::math::sph_bessel(L, kd)) * std::pow(2.0 * L + 1.0, 1.5) / std::sqrt(4.0 * pi);
        CHECK(term <= 1e-14);
    }
    CHECK(ell_truncation(10.0, 1e-6) <= ell_truncation(10.0, 1e-14));
    CHECK_THROWS_AS(ell_truncation(-1.0, 1e-14), std::domain_error);
    CHECK_THROWS_AS(ell_truncation(1e6, 1e-14), std::domain_error);
}

TEST_CASE("von Mises-Fisher correlation in closed form")
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double kappa : {2.0, 20.0, 80.0})
    {
        const double s = 1.0 / std::sqrt(2.0);
        const FB5Params p = vmf(kappa, {s, 0.0, s}, {s, 0.0, -s}, {0.0, 1.0, 0.0});
        const SfcEvaluator eval(MixtureModel::single(p), 90);
        for (int k = 0; k < 30; ++k)
        {
            const Vec3 dz{u(rng), u(rng), u(rng)};
            const double lambda = 0.7;
            INFO("kappa=" << kappa << " k=" << k);
            CHECK(std::abs(eval(dz, lambda) - vmf_rho(kappa, p.mu, dz, lambda)) <= 1e-12);
        }
    }
}

TEST_CASE("structural values")
{
    const SfcEvaluator eval(MixtureModel::single(FB5Params::standard(25.0, 10.0)), 60);
    CHECK(eval({0.0, 0.0, 0.0}, 1.0) == cdouble(1.0, 0.0));
    CHECK(eval.coeffs().band_limit() == 60);
    CHECK(eval.band_limit() == 60);

    // real density: rho(-dz) = conj(rho(dz))
    const Vec3 dz{0.4, -0.3, 0.2};
    CHECK(std::abs(eval({-0.4, 0.3, -0.2}, 1.0) - std::conj(eval(dz, 1.0))) <= 1e-13);

    const SfcEvaluator uniform(MixtureModel::single(FB5Params::standard(0.0, 0.0)), 80);
    for (double d : {0.01, 0.3, 1.0, 2.5, 4.0})
    {
        const cdouble r = uniform({0.0, d, 0.0}, 1.0);
        CHECK(std::fabs(r.real() - boost::math::sph_bessel(0, 2.0 * pi * d)) <= 1e-10);
        CHECK(std::fabs(r.imag()) <= 1e-10);
    }

    CoeffTable bad(4, true);
    bad(0, 0) = 1.0;
    CHECK_THROWS_AS(SfcEvaluator{bad}, ConstraintError);
    CHECK_THROWS_AS(eval(dz, -1.0), ConstraintError);
    CHECK_THROWS_AS(eval({30.0, 0.0, 0.0}, 1.0), std::out_of_range);
    CHECK_THROWS_AS(eval(dz, 1.0, 61), std::out_of_range);
}

TEST_CASE("complex tables give the same correlation as real ones")
{
    std::mt19937_64 rng(8);
    const RotationMatrix R = rotation_matrix({1.0, 2.0, 3.0});
    FB5Params p = FB5Params::standard(25.0, 10.0);
    p.eta1 = R.column(1);
    p.eta2 = R.column(2);
    p.mu = R.column(3);
    const SfcEvaluator real_eval(MixtureModel::single(p), 50);
    CoeffTable c = real_eval.coeffs();
    c.set_real_valued(false);
    const SfcEvaluator complex_eval(c);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 20; ++k)
    {
        const Vec3 dz{u(rng), u(rng), u(rng)};
        CHECK(std::abs(real_eval(dz, 1.0) - complex_eval(dz, 1.0)) <= 1e-13);
    }
}

TEST_CASE("angular and radial sums")
{
    const SfcEvaluator eval(MixtureModel::single(FB5Params::standard(25.0, 10.0)), 60);
    const Vec3 u{0.48, 0.6, 0.64};
    const auto S = eval.angular_sums(u, 60);
    REQUIRE(S.size() == 61);
    for (double d : {0.05, 0.5, 1.5})
        CHECK(std::abs(eval.radial_sum(S, d, 1.0) - eval({d * u[0], d * u[1], d * u[2]}, 1.0)) <= 1e-14);
    CHECK(eval.radial_sum(S, 0.0, 1.0) == cdouble(1.0, 0.0));
    CHECK_THROWS_AS(eval.angular_sums(u, 61), std::out_of_range);
    CHECK_THROWS_AS(eval.angular_sums({0.0, 0.0, 0.0}, 10), std::domain_error);
    CHECK_THROWS_AS(eval.radial_sum(eval.angular_sums(u, 10), 1.5, 1.0), std::out_of_range);
}

TEST_CASE("correlation curves")
{
    const MixtureModel model = MixtureModel::single(FB5Params::standard(25.0, 10.0));
    std::vector<double> grid;
    for (int i = 0; i < 20; ++i)
        grid.push_back(0.01 + 0.1 * i);

    const SfcCurve a = sfc_curve(model, uca_builder(16), 2, 3, 1.0, grid);
    REQUIRE(a.rho.size() == grid.size());
    CHECK(a.r_over_lambda == grid);
    const SfcEvaluator eval(model, 40);
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        const ArrayGeometry g = uca_positions(16, grid[i]);
        const Vec3 &zp = g.element(2), &zq = g.element(3);
        CHECK(std::abs(a.rho[i] - eval({zp[0] - zq[0], zp[1] - zq[1], zp[2] - zq[2]}, 1.0)) <= 1e-13);

        SfcRequest req;
        req.model = model;
        req.p = 2;
        req.q = 3;
        CHECK(std::abs(sfc_closed_form(req, g) - a.rho[i]) <= 1e-13);
    }

    const int q = nearest_neighbor(rda_positions(1.0), 1);
    const SfcCurve b = sfc_curve(eval, rda_builder(), 1, q, 2.0, grid);
    const SfcCurve c = sfc_curve(eval, scaled_builder(rda_positions(1.0)), 1, q, 2.0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        const ArrayGeometry g = rda_positions(2.0 * grid[i]);
        const Vec3 &zp = g.element(1), &zq = g.element(q);
        CHECK(std::abs(b.rho[i] - eval({zp[0] - zq[0], zp[1] - zq[1], zp[2] - zq[2]}, 2.0)) <= 1e-13);
        CHECK(b.rho[i] == c.rho[i]);
    }

    // p == q: fully correlated
    const SfcCurve self = sfc_curve(eval, uca_builder(8), 4, 4, 1.0, grid);
    for (const cdouble &r : self.rho)
        CHECK(r == cdouble(1.0, 0.0));

    CHECK_THROWS_AS(sfc_curve(model, uca_builder(16), 2, 3, 1.0, {}), std::invalid_argument);
    const std::vector<double> descending{1.0, 0.5};
    CHECK_THROWS_AS(sfc_curve(model, uca_builder(16), 2, 3, 1.0, descending), std::invalid_argument);
    CHECK_THROWS_AS(sfc_curve(model, uca_builder(16), 2, 17, 1.0, grid), ConstraintError);
}
