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

#ifndef FBHARM_FB5_HPP
#define FBHARM_FB5_HPP

#include "fbharm/sht.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fbharm
{
    // Five-parameter Fisher-Bingham (Kent) distribution
    //   f(x) = exp(kappa mu.x + beta [(eta1.x)^2 - (eta2.x)^2]) / C(kappa, beta)
    struct FB5Params
    {
        double kappa = 0.0;
        double beta = 0.0;
        Vec3 mu{0.0, 0.0, 1.0};
        Vec3 eta1{1.0, 0.0, 0.0};
        Vec3 eta2{0.0, 1.0, 0.0};

        // Mean direction on the north pole, major axis along x.
        static FB5Params standard(double kappa, double beta);

        // Throws ConstraintError if 0 <= beta <= kappa/2 <= 100 fails or the frame is not orthonormal.
        void validate() const;

        // A = eta1 eta1^T - eta2 eta2^T
        std::array<std::array<double, 3>, 3> shape_matrix() const;
    };

    struct MixtureComponent
    {
        double weight = 1.0;
        FB5Params params;
    };

    // h(x) = sum_w K_w f_w(x) with K_w > 0 and sum K_w = 1.
    struct MixtureModel
    {
        std::vector<MixtureComponent> components;

        static MixtureModel single(const FB5Params &params);
        void validate() const;
    };

    // Truncation levels of the kappa series (N) and the beta series (T).
    struct TruncationPolicy
    {
        int N = 24;
        int T = 12;

        static TruncationPolicy for_params(double kappa, double beta);
    };

    int truncation_n(double kappa);  // ceil(3 kappa / 2 + 24)
    int truncation_t(double beta);   // ceil(36 beta / 25 + 12)

    // log10 of beta^{2T} / (T!^2 2^{2T}), the size of the last retained beta-series term.
    double truncation_term_log10(double beta, int T);

    // e^{-kappa} C(kappa, beta)
    double normalization_scaled(double kappa, double beta);

    // Density of the standard distribution (mu = z, eta1 = x, eta2 = y).
    double standard_fb_pdf(const Direction &dir, double kappa, double beta);

    // Same density evaluated at a unit vector.
    double standard_fb_pdf(const Vec3 &x, double kappa, double beta);

    // Density via the rotation of the standard distribution, f_std(R^{-1} x).
    double fb5_pdf(const Direction &dir, const FB5Params &params);

    // Density from the exponential form with the shape matrix A.
    double fb5_pdf_direct(const Direction &dir, const FB5Params &params);

    // Columns [eta1, eta2, mu]; eta2 is negated if the triple is left-handed.
    RotationMatrix frame_to_rotation(const FB5Params &params);

    // zyz decomposition of a proper rotation. At the gimbal poles omega = 0.
    EulerAngles euler_from_rotation(const RotationMatrix &R);

    // Density object with the normalisation constant and rotation computed once.
    class FB5Density
    {
    public:
        explicit FB5Density(const FB5Params &params);

        double operator()(const Direction &dir) const;
        double operator()(const Vec3 &x) const;
        const FB5Params &params() const { return params_; }

    private:
        FB5Params params_;
        RotationMatrix R_;
        double scaled_norm_;
    };

    class MixtureDensity
    {
    public:
        explicit MixtureDensity(const MixtureModel &model);

        double operator()(const Direction &dir) const;
        double operator()(const Vec3 &x) const;

    private:
        std::vector<double> weights_;
        std::vector<FB5Density> parts_;
    };

    // Closed-form coefficients of the standard distribution up to degree L.
    CoeffTable standard_fb_coeffs(double kappa, double beta, int L, const WignerPi2Table &table, const TruncationPolicy &policy);
    CoeffTable standard_fb_coeffs(double kappa, double beta, int L, const WignerPi2Table &table);

    CoeffTable fb5_coeffs(const FB5Params &params, int L, const WignerPi2Table &table, const TruncationPolicy &policy);
    CoeffTable fb5_coeffs(const FB5Params &params, int L, const WignerPi2Table &table);

    CoeffTable mixture_coeffs(const MixtureModel &model, int L, const WignerPi2Table &table);

    // Mixture document {"components":[{"weight":..,"kappa":..,"beta":..,"mu":[..],"eta1":[..],"eta2":[..]}]}.
    // Frames within 1e-6 of orthonormal are Gram-Schmidt corrected. Throws ParseError on malformed
    // JSON and ConstraintError on invalid parameters.
    MixtureModel parse_mixture_json(const std::string &text);
    MixtureModel read_mixture_json(std::istream &is);
}

#endif
