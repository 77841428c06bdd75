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

#include "fbharm/oracle.hpp"
#include "fbharm/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace fbharm
{
    void gauss_legendre(int n, std::vector<double> &x, std::vector<double> &w)
    {
        if (n < 1)
            throw std::invalid_argument("gauss_legendre: need at least one node");
        x.assign(n, 0.0);
        w.assign(n, 0.0);
        for (int i = 0; i < (n + 1) / 2; ++i)
        {
            double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it)
            {
                double p0 = 1.0, p1 = z;
                for (int k = 2; k <= n; ++k)
                {
                    const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (z * p1 - p0) / (z * z - 1.0);
                const double dz = p1 / dp;
                z -= dz;
                if (std::fabs(dz) < 1.0e-15)
                    break;
            }
            // recompute the derivative at the converged node
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= n; ++k)
            {
                const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            const double wi = 2.0 / ((1.0 - z * z) * dp * dp);
            x[i] = -z;
            x[n - 1 - i] = z;
            w[i] = w[n - 1 - i] = wi;
        }
        if (n % 2 == 1)
            x[n / 2] = 0.0;
    }

    QuadratureRule quadrature_nodes(int L)
    {
        if (L < 0)
            throw std::invalid_argument("quadrature_nodes: negative degree");
        QuadratureRule rule;
        rule.order = 2 * L + 1;
        std::vector<double> x, w;
        gauss_legendre(L + 1, x, w);
        for (int j = 0; j < L + 1; ++j)
        {
            // north to south
            rule.theta.push_back(std::acos(x[L - j]));
            rule.ring_weight.push_back(w[L - j]);
        }
        rule.nphi = 2 * L + 2;
        return rule;
    }

    double QuadratureRule::phi(int k) const
    {
        return 2.0 * M_PI * k / nphi;
    }

    std::vector<QuadratureNode> QuadratureRule::nodes() const
    {
        std::vector<QuadratureNode> out;
        out.reserve(size());
        const double dphi = 2.0 * M_PI / nphi;
        for (std::size_t j = 0; j < theta.size(); ++j)
            for (int k = 0; k < nphi; ++k)
                out.push_back({Direction(theta[j], phi(k)), ring_weight[j] * dphi});
        return out;
    }

    CoeffTable numeric_sht(const SphereFunction &f, int L, const QuadratureRule &rule)
    {
        if (L < 0)
            throw std::invalid_argument("numeric_sht: negative band-limit");
        if (rule.order < 2 * L)
            throw std::invalid_argument("numeric_sht: quadrature order below 2L");

        const int nphi = rule.nphi;
        const double dphi = 2.0 * M_PI / nphi;
        std::vector<cdouble> roots(nphi);
        for (int k = 0; k < nphi; ++k)
            roots[k] = std::polar(1.0, -2.0 * M_PI * k / nphi);

        CoeffTable out(L);
        std::vector<cdouble> vals(nphi), F(static_cast<std::size_t>(2 * L + 1));
        for (std::size_t j = 0; j < rule.theta.size(); ++j)
        {
            const double th = rule.theta[j];
            for (int k = 0; k < nphi; ++k)
                vals[k] = f(Direction(th, rule.phi(k)));

            // F_m = sum_k f_k e^{-i m phi_k}
            for (int m = -L; m <= L; ++m)
            {
                cdouble s = 0.0;
                const int mm = ((m % nphi) + nphi) % nphi;
                for (int k = 0; k < nphi; ++k)
                    s += vals[k] * roots[(static_cast<long>(mm) * k) % nphi];
                F[m + L] = s;
            }

            const auto P = normalized_legendre(L, std::cos(th));
            const double wj = rule.ring_weight[j] * dphi;
            for (int ell = 0; ell <= L; ++ell)
                for (int m = -ell; m <= ell; ++m)
                {
                    const int am = std::abs(m);
                    const double sign = (m < 0 && am % 2 == 1) ? -1.0 : 1.0;
                    out(ell, m) += wj * sign * P[legendre_index(ell, am)] * F[m + L];
                }
        }
        return out;
    }

    CoeffTable numeric_sht(const RealSphereFunction &f, int L, const QuadratureRule &rule)
    {
        CoeffTable out = numeric_sht(SphereFunction([&f](const Direction &d) { return cdouble(f(d), 0.0); }), L, rule);
        out.set_real_valued(true);
        return out;
    }

    cdouble sfc_numeric(const MixtureModel &model, const Vec3 &zp, const Vec3 &zq, double lambda, const QuadratureRule &rule)
    {
        if (!(lambda > 0.0))
            throw ConstraintError("sfc_numeric: wavelength must be positive");
        const MixtureDensity h(model);
        const double k = 2.0 * M_PI / lambda;
        const Vec3 dz{zp[0] - zq[0], zp[1] - zq[1], zp[2] - zq[2]};
        const double dphi = 2.0 * M_PI / rule.nphi;

        cdouble sum = 0.0;
        for (std::size_t j = 0; j < rule.theta.size(); ++j)
        {
            const double st = std::sin(rule.theta[j]), ct = std::cos(rule.theta[j]);
            cdouble ring = 0.0;
            for (int kk = 0; kk < rule.nphi; ++kk)
            {
                const double ph = rule.phi(kk);
                const Vec3 x{st * std::cos(ph), st * std::sin(ph), ct};
                ring += h(x) * std::polar(1.0, k * dot(dz, x));
            }
            sum += rule.ring_weight[j] * dphi * ring;
        }
        return sum;
    }

    double spatial_error(const CoeffTable &coeffs, double kappa, double beta, int L)
    {
        if (L < 1)
            throw std::invalid_argument("spatial_error: L must be at least 1");
        if (coeffs.band_limit() < L)
            throw std::invalid_argument("spatial_error: coefficient table band-limit below L");
        const CoeffTable c = coeffs.with_band_limit(L);

        std::vector<double> phis(L);
        for (int k = 0; k < L; ++k)
            phis[k] = 2.0 * M_PI * k / L;

        const FB5Density f(FB5Params::standard(kappa, beta));
        double sum = 0.0;
        for (int j = 0; j < L; ++j)
        {
            const double th = M_PI * (2.0 * j + 1.0) / (2.0 * L);
            const auto approx = synthesize_ring(c, th, phis);
            for (int k = 0; k < L; ++k)
                sum += std::norm(f(Direction(th, phis[k])) - approx[k]);
        }
        return sum / (static_cast<double>(L) * L);
    }

    double spatial_error(double kappa, double beta, int L)
    {
        return spatial_error(standard_fb_coeffs(kappa, beta, L, WignerPi2Table(L)), kappa, beta, L);
    }
}
