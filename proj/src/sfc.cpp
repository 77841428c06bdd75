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

#include "fbharm/sfc.hpp"
#include "fbharm/errors.hpp"
#include "fbharm/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fbharm
{
    namespace
    {
        constexpr int max_degree = 500;

        Vec3 sub(const Vec3 &a, const Vec3 &b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

        cdouble i_pow(int k)
        {
            switch (k % 4)
            {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
            }
        }

        int base_truncation(double kd)
        {
            if (!(kd >= 0.0) || !std::isfinite(kd))
                throw std::domain_error("ell_truncation: k d must be finite and non-negative");
            return static_cast<int>(std::ceil(M_E * kd / 2.0 - 1.0e-12)) + 20;
        }

        double universal_degree_bound(int ell) { return std::pow(2.0 * ell + 1.0, 1.5) / std::sqrt(4.0 * M_PI); }

        void check_lambda(double lambda)
        {
            if (!(lambda > 0.0) || !std::isfinite(lambda))
                throw ConstraintError("wavelength must be positive");
        }
    }

    // ---- geometry ---------------------------------------------------------

    const Vec3 &ArrayGeometry::element(int p) const
    {
        if (p < 1 || p > size())
            throw ConstraintError("element index " + std::to_string(p) + " outside 1.." + std::to_string(size()));
        return positions[p - 1];
    }

    ArrayGeometry uca_positions(int M, double R)
    {
        if (M < 1)
            throw ConstraintError("uca_positions: need at least one element");
        if (!(R >= 0.0) || !std::isfinite(R))
            throw ConstraintError("uca_positions: radius must be non-negative");
        ArrayGeometry g;
        g.label = "uca" + std::to_string(M);
        for (int p = 1; p <= M; ++p)
        {
            const double a = 2.0 * M_PI * p / M;
            g.positions.push_back({R * std::cos(a), R * std::sin(a), 0.0});
        }
        return g;
    }

    ArrayGeometry rda_positions(double R)
    {
        if (!(R > 0.0) || !std::isfinite(R))
            throw ConstraintError("rda_positions: radius must be positive");
        const double phi = 0.5 * (1.0 + std::sqrt(5.0));
        const double iphi = 1.0 / phi;
        const double s = R / std::sqrt(3.0);

        ArrayGeometry g;
        g.label = "rda";
        const double pm[2] = {1.0, -1.0};
        for (double a : pm)
            for (double b : pm)
                for (double c : pm)
                    g.positions.push_back({s * a, s * b, s * c});
        for (double a : pm)
            for (double b : pm)
                g.positions.push_back({0.0, s * a * iphi, s * b * phi});
        for (double a : pm)
            for (double b : pm)
                g.positions.push_back({s * a * iphi, s * b * phi, 0.0});
        for (double a : pm)
            for (double b : pm)
                g.positions.push_back({s * a * phi, 0.0, s * b * iphi});
        return g;
    }

    int nearest_neighbor(const ArrayGeometry &geometry, int p)
    {
        const Vec3 &z = geometry.element(p);
        if (geometry.size() < 2)
            throw ConstraintError("nearest_neighbor: geometry has a single element");
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= geometry.size(); ++k)
        {
            if (k == p)
                continue;
            const double d = norm(sub(geometry.element(k), z));
            if (d < best_d * (1.0 - 1.0e-12))
            {
                best_d = d;
                best = k;
            }
        }
        return best;
    }

    cdouble steering_phase(const Vec3 &z, const Direction &dir, double lambda)
    {
        check_lambda(lambda);
        return std::polar(1.0, 2.0 * M_PI / lambda * dot(z, dir.unit_vector()));
    }

    int ell_truncation(double kd, double tol)
    {
        int L = base_truncation(kd);
        if (L > max_degree)
            throw std::domain_error("ell_truncation: separation too large for the supported degree range");
        while (4.0 * M_PI * std::fabs(spherical_bessel_j(L, kd)) * universal_degree_bound(L) > tol)
        {
            if (++L > max_degree)
                throw std::domain_error("ell_truncation: separation too large for the supported degree range");
        }
        return L;
    }

    // ---- closed form ------------------------------------------------------

    SfcEvaluator::SfcEvaluator(const MixtureModel &model, int L)
        : SfcEvaluator(mixture_coeffs(model, L, WignerPi2Table(L)))
    {
    }

    SfcEvaluator::SfcEvaluator(CoeffTable coeffs) : h_(std::move(coeffs))
    {
        check_normalised();
        const int L = h_.band_limit();
        for (int ell = 0; ell <= L; ++ell)
        {
            double s = 0.0;
            for (int m = -ell; m <= ell; ++m)
                s += std::abs(h_(ell, m));
            degree_abs_sum_.push_back(s);
        }

        const std::size_t tri = static_cast<std::size_t>(L + 1) * (L + 2) / 2;
        rec_a_.assign(tri, 0.0);
        rec_b_.assign(tri, 0.0);
        hre2_.assign(tri, 0.0);
        him2_.assign(tri, 0.0);
        for (int ell = 0; ell <= L; ++ell)
        {
            diag_factor_.push_back(ell == 0 ? 1.0 / std::sqrt(4.0 * M_PI) : -std::sqrt((2.0 * ell + 1.0) / (2.0 * ell)));
            for (int m = 0; m <= ell; ++m)
            {
                const std::size_t k = legendre_index(ell, m);
                if (m + 2 <= ell)
                {
                    const double l2 = double(ell) * ell, m2 = double(m) * m, lm1 = ell - 1.0;
                    rec_a_[k] = std::sqrt((4.0 * l2 - 1.0) / (l2 - m2));
                    rec_b_[k] = std::sqrt((lm1 * lm1 - m2) / (4.0 * lm1 * lm1 - 1.0));
                }
                const double f = (m == 0) ? 1.0 : 2.0;
                hre2_[k] = f * h_(ell, m).real();
                him2_[k] = f * h_(ell, m).imag();
            }
        }
    }

    void SfcEvaluator::check_normalised() const
    {
        // 4 pi h_0^0 Y_0^0 = 2 sqrt(pi) h_0^0 must equal 1
        const cdouble mass = 2.0 * std::sqrt(M_PI) * h_(0, 0);
        if (std::abs(mass - 1.0) > 1.0e-10)
            throw ConstraintError("SFC: AoA density does not have unit mass");
    }

    int SfcEvaluator::cutoff(double kd, double tol, std::vector<double> &j) const
    {
        const int base = base_truncation(kd);
        auto term = [&](int ell) {
            const double sum = ell <= h_.band_limit() ? degree_abs_sum_[ell] : universal_degree_bound(ell);
            return 4.0 * M_PI * std::fabs(j[ell]) * sum;
        };
        for (int cap = base + 4;; cap += 32)
        {
            if (cap > max_degree + 1)
                throw std::domain_error("ell_truncation: separation too large for the supported degree range");
            j = spherical_bessel_j_seq(cap, kd);
            for (int L = base; L < cap; ++L)
                if (term(L) <= tol && term(L + 1) <= tol)
                    return L;
        }
    }

    int SfcEvaluator::ell_truncation(double kd, double tol) const
    {
        std::vector<double> j;
        return cutoff(kd, tol, j);
    }

    cdouble SfcEvaluator::operator()(const Vec3 &dz, double lambda, int L_sum, double tol) const
    {
        check_lambda(lambda);
        const double d = norm(dz);
        if (d == 0.0)
            return {1.0, 0.0};

        const double kd = 2.0 * M_PI / lambda * d;
        std::vector<double> j;
        int L = L_sum;
        if (L < 0)
            L = cutoff(kd, tol, j);
        else
            j = spherical_bessel_j_seq(L, kd);
        if (L > h_.band_limit())
            throw std::out_of_range("SFC: degree cut-off " + std::to_string(L) + " exceeds coefficient band-limit " +
                                    std::to_string(h_.band_limit()));

        const std::vector<cdouble> S = angular_sums(dz, L);
        cdouble rho = 0.0;
        for (int ell = 0; ell <= L; ++ell)
            rho += i_pow(ell) * j[ell] * S[ell];
        return 4.0 * M_PI * rho;
    }

    std::vector<cdouble> SfcEvaluator::angular_sums(const Vec3 &u, int L) const
    {
        if (L > h_.band_limit())
            throw std::out_of_range("SFC: degree " + std::to_string(L) + " exceeds coefficient band-limit " + std::to_string(h_.band_limit()));
        const double d = norm(u);
        if (!(d > 0.0))
            throw std::domain_error("SFC: direction of a zero vector");
        const double rxy = std::hypot(u[0], u[1]);
        const cdouble eiphi = rxy > 0.0 ? cdouble(u[0] / rxy, u[1] / rxy) : cdouble(1.0, 0.0);
        std::vector<cdouble> S(static_cast<std::size_t>(L) + 1, 0.0);
        if (h_.real_valued())
            sums_real(u[2] / d, rxy / d, eiphi, L, S);
        else
            sums_complex(u[2] / d, rxy / d, eiphi, L, S);
        return S;
    }

    cdouble SfcEvaluator::radial_sum(const std::vector<cdouble> &S, double d, double lambda, double tol) const
    {
        check_lambda(lambda);
        if (d == 0.0)
            return {1.0, 0.0};
        const double kd = 2.0 * M_PI / lambda * d;
        std::vector<double> j;
        const int L = cutoff(kd, tol, j);
        if (L >= static_cast<int>(S.size()))
            throw std::out_of_range("SFC: angular sums too short for the degree cut-off");
        cdouble rho = 0.0;
        for (int ell = 0; ell <= L; ++ell)
            rho += i_pow(ell) * j[ell] * S[ell];
        return 4.0 * M_PI * rho;
    }

    // Real density: h_ell^{-m} Y_ell^{-m} = conj(h_ell^m Y_ell^m), so S_ell is real. The Legendre recurrence runs
    // degree by degree over all orders at once.
    void SfcEvaluator::sums_real(double x, double s, cdouble eiphi, int L, std::vector<cdouble> &S) const
    {
        std::vector<double> cm(L + 1), sm(L + 1), p1(L + 1, 0.0), p2(L + 1, 0.0);
        cdouble e(1.0, 0.0);
        for (int m = 0; m <= L; ++m)
        {
            cm[m] = e.real();
            sm[m] = e.imag();
            e *= eiphi;
        }

        for (int ell = 0; ell <= L; ++ell)
        {
            const std::size_t k0 = legendre_index(ell, 0);
            if (ell == 0)
                p1[0] = diag_factor_[0];
            else
            {
                const double diag = diag_factor_[ell] * s * p1[ell - 1];
                const double sub = std::sqrt(2.0 * ell + 1.0) * x * p1[ell - 1];
                const double *a = &rec_a_[k0];
                const double *b = &rec_b_[k0];
#pragma omp simd
                for (int m = 0; m <= ell - 2; ++m)
                {
                    const double p = a[m] * (x * p1[m] - b[m] * p2[m]);
                    p2[m] = p1[m];
                    p1[m] = p;
                }
                p2[ell - 1] = p1[ell - 1];
                p1[ell - 1] = sub;
                p1[ell] = diag;
            }

            const double *hr = &hre2_[k0];
            const double *hi = &him2_[k0];
            double sum = 0.0;
#pragma omp simd reduction(+ : sum)
            for (int m = 0; m <= ell; ++m)
                sum += p1[m] * (hr[m] * cm[m] - hi[m] * sm[m]);
            S[ell] = sum;
        }
    }

    void SfcEvaluator::sums_complex(double x, double s, cdouble eiphi, int L, std::vector<cdouble> &S) const
    {
        const auto P = normalized_legendre(L, x);
        (void)s;
        std::vector<cdouble> em(static_cast<std::size_t>(L) + 1);
        em[0] = 1.0;
        for (int m = 1; m <= L; ++m)
            em[m] = em[m - 1] * eiphi;
        for (int ell = 0; ell <= L; ++ell)
        {
            cdouble sum = h_(ell, 0) * P[legendre_index(ell, 0)];
            for (int m = 1; m <= ell; ++m)
            {
                const double sign = (m % 2 == 0) ? 1.0 : -1.0;
                sum += P[legendre_index(ell, m)] * (h_(ell, m) * em[m] + sign * h_(ell, -m) * std::conj(em[m]));
            }
            S[ell] = sum;
        }
    }

    cdouble sfc_closed_form(const SfcRequest &req, const ArrayGeometry &geometry)
    {
        check_lambda(req.lambda);
        const Vec3 dz = sub(geometry.element(req.p), geometry.element(req.q));
        const double kd = 2.0 * M_PI / req.lambda * norm(dz);
        const int L = req.L_sum >= 0 ? req.L_sum : ell_truncation(kd, req.tol);
        const SfcEvaluator eval(req.model, L);
        return eval(dz, req.lambda, req.L_sum, req.tol);
    }

    // ---- curves -----------------------------------------------------------

    GeometryBuilder uca_builder(int M)
    {
        if (M < 1)
            throw ConstraintError("uca_positions: need at least one element");
        return scaled_builder(uca_positions(M, 1.0));
    }

    GeometryBuilder scaled_builder(ArrayGeometry unit)
    {
        return [unit = std::move(unit)](double R) {
            ArrayGeometry g = unit;
            for (auto &z : g.positions)
                for (auto &c : z)
                    c *= R;
            return g;
        };
    }

    GeometryBuilder rda_builder()
    {
        return scaled_builder(rda_positions(1.0));
    }

    SfcCurve sfc_curve(const SfcEvaluator &evaluator, const GeometryBuilder &build, int p, int q, double lambda,
                       std::span<const double> r_over_lambda, double tol)
    {
        check_lambda(lambda);
        if (r_over_lambda.empty())
            throw std::invalid_argument("sfc_curve: empty grid");

        // Arrays that scale with the radius keep the direction of z_p - z_q; the angular sums are then
        // reused and only the Bessel factors change from point to point.
        SfcCurve curve;
        Vec3 last_dir{0.0, 0.0, 0.0};
        std::vector<cdouble> S;
        for (double r : r_over_lambda)
        {
            const ArrayGeometry g = build(r * lambda);
            const Vec3 dz = sub(g.element(p), g.element(q));
            const double d = norm(dz);
            curve.r_over_lambda.push_back(r);
            if (d == 0.0)
            {
                curve.rho.push_back({1.0, 0.0});
                continue;
            }
            const Vec3 u{dz[0] / d, dz[1] / d, dz[2] / d};
            const bool same = std::fabs(u[0] - last_dir[0]) <= 1.0e-15 && std::fabs(u[1] - last_dir[1]) <= 1.0e-15 &&
                              std::fabs(u[2] - last_dir[2]) <= 1.0e-15;
            if (!same)
            {
                S = evaluator.angular_sums(u, evaluator.band_limit());
                last_dir = u;
            }
            curve.rho.push_back(evaluator.radial_sum(S, d, lambda, tol));
        }
        return curve;
    }

    SfcCurve sfc_curve(const MixtureModel &model, const GeometryBuilder &build, int p, int q, double lambda,
                       std::span<const double> r_over_lambda, double tol)
    {
        check_lambda(lambda);
        if (r_over_lambda.empty())
            throw std::invalid_argument("sfc_curve: empty grid");
        if (!std::is_sorted(r_over_lambda.begin(), r_over_lambda.end()))
            throw std::invalid_argument("sfc_curve: grid must be ascending");

        double kd_max = 0.0;
        for (double r : r_over_lambda)
        {
            const ArrayGeometry g = build(r * lambda);
            kd_max = std::max(kd_max, 2.0 * M_PI / lambda * norm(sub(g.element(p), g.element(q))));
        }
        const SfcEvaluator evaluator(model, ell_truncation(kd_max, tol));
        return sfc_curve(evaluator, build, p, q, lambda, r_over_lambda, tol);
    }
}
