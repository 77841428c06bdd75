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

#include "fbharm/fb5.hpp"
#include "fbharm/errors.hpp"
#include "fbharm/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fbharm
{
    namespace
    {
        constexpr double unit_tol = 1.0e-12;
        constexpr double ortho_tol = 1.0e-10;

        // kappa (mu.x - 1) + beta ((eta1.x)^2 - (eta2.x)^2) in the local frame: a = eta1.x, b = eta2.x, c = mu.x.
        // 1 - c is taken as (a^2 + b^2) / (1 + c) on the upper hemisphere to keep relative accuracy near the mode.
        double scaled_exponent(double a, double b, double c, double kappa, double beta)
        {
            const double one_minus_c = (c > 0.0) ? (a * a + b * b) / (1.0 + c) : 1.0 - c;
            return -kappa * one_minus_c + beta * (a * a - b * b);
        }
    }

    // ---- parameters -------------------------------------------------------

    FB5Params FB5Params::standard(double kappa, double beta)
    {
        FB5Params p;
        p.kappa = kappa;
        p.beta = beta;
        return p;
    }

    void FB5Params::validate() const
    {
        if (!std::isfinite(kappa) || !std::isfinite(beta))
            throw ConstraintError("FB5: kappa and beta must be finite");
        if (kappa < 0.0)
            throw ConstraintError("FB5: kappa must be non-negative");
        if (kappa > 200.0)
            throw ConstraintError("FB5: kappa above the supported range (200)");
        if (beta < 0.0 || beta > 0.5 * kappa)
            throw ConstraintError("FB5: require 0 <= beta <= kappa/2, got kappa=" + std::to_string(kappa) + " beta=" + std::to_string(beta));

        for (const Vec3 *v : {&mu, &eta1, &eta2})
            if (std::fabs(norm(*v) - 1.0) > unit_tol)
                throw ConstraintError("FB5: frame vectors must have unit norm");
        if (std::fabs(dot(mu, eta1)) > ortho_tol || std::fabs(dot(mu, eta2)) > ortho_tol || std::fabs(dot(eta1, eta2)) > ortho_tol)
            throw ConstraintError("FB5: frame vectors must be pairwise orthogonal");
    }

    std::array<std::array<double, 3>, 3> FB5Params::shape_matrix() const
    {
        std::array<std::array<double, 3>, 3> A{};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                A[a][b] = eta1[a] * eta1[b] - eta2[a] * eta2[b];
        return A;
    }

    MixtureModel MixtureModel::single(const FB5Params &params)
    {
        MixtureModel m;
        m.components.push_back({1.0, params});
        return m;
    }

    void MixtureModel::validate() const
    {
        if (components.empty())
            throw ConstraintError("mixture: at least one component required");
        double total = 0.0;
        for (const auto &c : components)
        {
            if (!(c.weight > 0.0) || !std::isfinite(c.weight))
                throw ConstraintError("mixture: weights must be positive");
            c.params.validate();
            total += c.weight;
        }
        if (std::fabs(total - 1.0) > 1.0e-12)
            throw ConstraintError("mixture: weights must sum to 1, got " + std::to_string(total));
    }

    // ---- truncation -------------------------------------------------------

    int truncation_n(double kappa)
    {
        if (!(kappa >= 0.0))
            throw std::domain_error("truncation_n: kappa must be non-negative");
        return static_cast<int>(std::ceil(1.5 * kappa + 24.0 - 1.0e-9));
    }

    int truncation_t(double beta)
    {
        if (!(beta >= 0.0))
            throw std::domain_error("truncation_t: beta must be non-negative");
        return static_cast<int>(std::ceil(36.0 * beta / 25.0 + 12.0 - 1.0e-9));
    }

    double truncation_term_log10(double beta, int T)
    {
        if (beta == 0.0)
            return T == 0 ? 0.0 : -INFINITY;
        const double ln = 2.0 * T * std::log(beta / 2.0) - 2.0 * std::lgamma(T + 1.0);
        return ln / std::log(10.0);
    }

    TruncationPolicy TruncationPolicy::for_params(double kappa, double beta)
    {
        return {truncation_n(kappa), truncation_t(beta)};
    }

    // ---- normalisation and densities --------------------------------------

    double normalization_scaled(double kappa, double beta)
    {
        if (!(kappa >= 0.0) || !(beta >= 0.0) || beta > 0.5 * kappa)
            throw ConstraintError("normalization_scaled: require 0 <= beta <= kappa/2");
        if (kappa == 0.0)
            return 4.0 * M_PI;

        // e^{-kappa} C = 4 pi sum_r w_r (2 beta / kappa)^{2r} e^{-kappa} i_{2r}(kappa),  w_r = C(2r, r) / 4^r
        const double rho2 = (2.0 * beta / kappa) * (2.0 * beta / kappa);
        int nmax = 2 * static_cast<int>(kappa) + 64;
        for (;;)
        {
            const auto is = scaled_sph_bessel_i(nmax, kappa);
            double sum = 0.0, w = 1.0, rp = 1.0;
            for (int r = 0; 2 * r <= nmax; ++r)
            {
                if (r > 0)
                {
                    w *= (2.0 * r - 1.0) / (2.0 * r);
                    rp *= rho2;
                }
                const double term = w * rp * is[2 * r];
                sum += term;
                if (term <= 1.0e-18 * sum)
                    return 4.0 * M_PI * sum;
            }
            nmax *= 2;
        }
    }

    double standard_fb_pdf(const Vec3 &x, double kappa, double beta)
    {
        return std::exp(scaled_exponent(x[0], x[1], x[2], kappa, beta)) / normalization_scaled(kappa, beta);
    }

    double standard_fb_pdf(const Direction &dir, double kappa, double beta)
    {
        return standard_fb_pdf(dir.unit_vector(), kappa, beta);
    }

    double fb5_pdf(const Direction &dir, const FB5Params &params)
    {
        return FB5Density(params)(dir);
    }

    double fb5_pdf_direct(const Direction &dir, const FB5Params &params)
    {
        params.validate();
        const Vec3 x = dir.unit_vector();
        const auto A = params.shape_matrix();
        double quad = 0.0;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                quad += x[a] * A[a][b] * x[b];
        const double e = params.kappa * (dot(params.mu, x) - 1.0) + params.beta * quad;
        return std::exp(e) / normalization_scaled(params.kappa, params.beta);
    }

    FB5Density::FB5Density(const FB5Params &params)
        : params_(params), R_(frame_to_rotation(params)), scaled_norm_(normalization_scaled(params.kappa, params.beta))
    {
    }

    double FB5Density::operator()(const Vec3 &x) const
    {
        const Vec3 local = R_.apply_transpose(x);
        return std::exp(scaled_exponent(local[0], local[1], local[2], params_.kappa, params_.beta)) / scaled_norm_;
    }

    double FB5Density::operator()(const Direction &dir) const
    {
        return (*this)(dir.unit_vector());
    }

    MixtureDensity::MixtureDensity(const MixtureModel &model)
    {
        model.validate();
        for (const auto &c : model.components)
        {
            weights_.push_back(c.weight);
            parts_.emplace_back(c.params);
        }
    }

    double MixtureDensity::operator()(const Vec3 &x) const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < parts_.size(); ++i)
            s += weights_[i] * parts_[i](x);
        return s;
    }

    double MixtureDensity::operator()(const Direction &dir) const
    {
        return (*this)(dir.unit_vector());
    }

    // ---- frames -----------------------------------------------------------

    RotationMatrix frame_to_rotation(const FB5Params &params)
    {
        params.validate();
        RotationMatrix R = RotationMatrix::from_columns(params.eta1, params.eta2, params.mu);
        if (R.determinant() < 0.0)
        {
            const Vec3 flipped{-params.eta2[0], -params.eta2[1], -params.eta2[2]};
            R = RotationMatrix::from_columns(params.eta1, flipped, params.mu);
        }
        return R;
    }

    EulerAngles euler_from_rotation(const RotationMatrix &R)
    {
        if (R.orthogonality_error() > 1.0e-9 || std::fabs(R.determinant() - 1.0) > 1.0e-9)
            throw std::invalid_argument("euler_from_rotation: matrix is not a proper rotation");

        const double s = std::hypot(R(1, 3), R(2, 3));
        const double vartheta = std::atan2(s, R(3, 3));
        if (s < 1.0e-12)
        {
            if (R(3, 3) > 0.0)
                return EulerAngles(std::atan2(R(2, 1), R(1, 1)), 0.0, 0.0);
            return EulerAngles(std::atan2(-R(2, 1), -R(1, 1)), M_PI, 0.0);
        }
        return EulerAngles(std::atan2(R(2, 3), R(1, 3)), vartheta, std::atan2(R(3, 2), -R(3, 1)));
    }
}
