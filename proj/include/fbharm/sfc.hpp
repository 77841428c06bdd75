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

#ifndef FBHARM_SFC_HPP
#define FBHARM_SFC_HPP

#include "fbharm/fb5.hpp"
#include "fbharm/sht.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fbharm
{
    // Antenna element positions in metres; elements are numbered from 1.
    struct ArrayGeometry
    {
        std::vector<Vec3> positions;
        std::string label;

        int size() const { return static_cast<int>(positions.size()); }

        // 1-based access; throws ConstraintError when out of range.
        const Vec3 &element(int p) const;
    };

    // z_p = [R cos(2 pi p / M), R sin(2 pi p / M), 0], p = 1..M
    ArrayGeometry uca_positions(int M, double R);

    // The 20 vertices of a regular dodecahedron with circumradius R.
    ArrayGeometry rda_positions(double R);

    // Closest other element to element p (smallest index on ties).
    int nearest_neighbor(const ArrayGeometry &geometry, int p);

    // e^{i k z.x}, k = 2 pi / lambda
    cdouble steering_phase(const Vec3 &z, const Direction &dir, double lambda);

    // Degree cut-off for the plane-wave sum: ceil(e kd / 2) + 20, then increased while the
    // bound 4 pi |j_ell(kd)| (2 ell + 1)^{3/2} / sqrt(4 pi) on the degree-ell term exceeds tol.
    int ell_truncation(double kd, double tol);

    // Closed-form correlation from the expansion coefficients of the AoA density.
    class SfcEvaluator
    {
    public:
        // Coefficients of the mixture up to degree L.
        SfcEvaluator(const MixtureModel &model, int L);
        explicit SfcEvaluator(CoeffTable coeffs);

        const CoeffTable &coeffs() const { return h_; }
        int band_limit() const { return h_.band_limit(); }

        // Cut-off using the actual degree sums sum_m |h_ell^m| past ceil(e kd / 2) + 20.
        int ell_truncation(double kd, double tol) const;

        // rho(dz) for separation dz = z_p - z_q. L_sum < 0 selects ell_truncation(k |dz|, tol).
        cdouble operator()(const Vec3 &dz, double lambda, int L_sum = -1, double tol = 1.0e-14) const;

        // S_ell(u) = sum_m h_ell^m Y_ell^m(u) for ell <= L. rho(d u) = 4 pi sum_ell i^ell j_ell(k d) S_ell(u),
        // so points sharing a direction need these sums once.
        std::vector<cdouble> angular_sums(const Vec3 &u, int L) const;
        cdouble radial_sum(const std::vector<cdouble> &S, double d, double lambda, double tol = 1.0e-14) const;

    private:
        void check_normalised() const;
        int cutoff(double kd, double tol, std::vector<double> &j) const;

        CoeffTable h_;
        std::vector<double> degree_abs_sum_;
        void sums_complex(double x, double s, cdouble eiphi, int L, std::vector<cdouble> &S) const;
        void sums_real(double x, double s, cdouble eiphi, int L, std::vector<cdouble> &S) const;

        // Normalised Legendre recurrence factors at ell (ell + 1) / 2 + m, m <= ell - 2.
        std::vector<double> rec_a_, rec_b_;
        std::vector<double> diag_factor_;
        // Re and Im of h_ell^m for m >= 0 in the same layout, doubled for m > 0.
        std::vector<double> hre2_, him2_;
    };

    struct SfcRequest
    {
        MixtureModel model;
        int p = 1;
        int q = 2;
        double lambda = 1.0;
        int L_sum = -1;      // < 0: chosen by ell_truncation
        double tol = 1.0e-14;
    };

    cdouble sfc_closed_form(const SfcRequest &req, const ArrayGeometry &geometry);

    struct SfcCurve
    {
        std::vector<double> r_over_lambda;
        std::vector<cdouble> rho;
    };

    // Builds the array for a given radius in metres.
    using GeometryBuilder = std::function<ArrayGeometry(double radius)>;

    GeometryBuilder uca_builder(int M);
    GeometryBuilder rda_builder();
    // Unit-radius template positions scaled by the radius.
    GeometryBuilder scaled_builder(ArrayGeometry unit);

    // rho(z_p - z_q) over a grid of R / lambda with the array rebuilt at every radius.
    SfcCurve sfc_curve(const SfcEvaluator &evaluator, const GeometryBuilder &build, int p, int q, double lambda,
                       std::span<const double> r_over_lambda, double tol = 1.0e-14);

    // Same, with the coefficients computed once at the band-limit needed for the largest separation.
    SfcCurve sfc_curve(const MixtureModel &model, const GeometryBuilder &build, int p, int q, double lambda,
                       std::span<const double> r_over_lambda, double tol = 1.0e-14);
}

#endif
