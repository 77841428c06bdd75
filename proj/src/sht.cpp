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

#include "fbharm/sht.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fbharm
{
    namespace
    {
        constexpr double two_pi = 2.0 * M_PI;

        double wrap_two_pi(double a)
        {
            double r = std::fmod(a, two_pi);
            if (r < 0.0)
                r += two_pi;
            if (r >= two_pi)
                r = 0.0;
            return r;
        }

        double parity_sign(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }
    }

    double norm(const Vec3 &a)
    {
        return std::hypot(a[0], a[1], a[2]);
    }

    // ---- Direction --------------------------------------------------------

    Direction::Direction(double theta, double phi)
    {
        if (!std::isfinite(theta) || !std::isfinite(phi))
            throw std::domain_error("Direction: non-finite angle");
        double t = wrap_two_pi(theta);
        if (t > M_PI)
        {
            t = two_pi - t;
            phi += M_PI;
        }
        theta_ = t;
        phi_ = wrap_two_pi(phi);
    }

    Direction Direction::from_vector(const Vec3 &v)
    {
        const double r = norm(v);
        if (!(r > 0.0) || !std::isfinite(r))
            throw std::domain_error("Direction::from_vector: zero or non-finite vector");
        Direction d;
        d.theta_ = std::atan2(std::hypot(v[0], v[1]), v[2]);
        d.phi_ = wrap_two_pi(std::atan2(v[1], v[0]));
        return d;
    }

    Vec3 Direction::unit_vector() const
    {
        const double st = std::sin(theta_);
        return {st * std::cos(phi_), st * std::sin(phi_), std::cos(theta_)};
    }

    // ---- CoeffTable -------------------------------------------------------

    CoeffTable::CoeffTable(int band_limit, bool real_valued)
        : L_(band_limit), real_valued_(real_valued)
    {
        if (band_limit < 0)
            throw std::invalid_argument("CoeffTable: band-limit must be non-negative");
        data_.assign(static_cast<std::size_t>(band_limit + 1) * (band_limit + 1), cdouble(0.0, 0.0));
    }

    const cdouble &CoeffTable::at(int ell, int m) const
    {
        if (ell < 0 || ell > L_ || m < -ell || m > ell)
            throw std::out_of_range("CoeffTable: (" + std::to_string(ell) + "," + std::to_string(m) + ") outside band-limit " + std::to_string(L_));
        return data_[index(ell, m)];
    }

    CoeffTable CoeffTable::with_band_limit(int L) const
    {
        CoeffTable out(L, real_valued_);
        const int common = std::min(L, L_);
        std::copy_n(data_.begin(), static_cast<std::size_t>(common + 1) * (common + 1), out.data_.begin());
        return out;
    }

    double CoeffTable::degree_power(int ell) const
    {
        double s = 0.0;
        for (int m = -ell; m <= ell; ++m)
            s += std::norm((*this)(ell, m));
        return s;
    }

    double CoeffTable::conjugate_symmetry_error() const
    {
        double worst = 0.0;
        for (int ell = 0; ell <= L_; ++ell)
            for (int m = 0; m <= ell; ++m)
            {
                const cdouble expect = parity_sign(m) * std::conj((*this)(ell, m));
                worst = std::max(worst, std::abs((*this)(ell, -m) - expect));
            }
        return worst;
    }

    CoeffTable &CoeffTable::operator+=(const CoeffTable &other)
    {
        if (other.L_ != L_)
            throw std::invalid_argument("CoeffTable: band-limit mismatch in addition");
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += other.data_[i];
        real_valued_ = real_valued_ && other.real_valued_;
        return *this;
    }

    CoeffTable &CoeffTable::operator*=(double s)
    {
        for (auto &c : data_)
            c *= s;
        return *this;
    }

    // ---- Rotations --------------------------------------------------------

    EulerAngles::EulerAngles(double varphi_, double vartheta_, double omega_)
        : varphi(wrap_two_pi(varphi_)), vartheta(vartheta_), omega(wrap_two_pi(omega_))
    {
        if (!(vartheta_ >= 0.0 && vartheta_ <= M_PI))
            throw std::domain_error("EulerAngles: vartheta must lie in [0, pi]");
    }

    RotationMatrix RotationMatrix::from_columns(const Vec3 &c1, const Vec3 &c2, const Vec3 &c3)
    {
        RotationMatrix R;
        for (int a = 0; a < 3; ++a)
        {
            R.m[a][0] = c1[a];
            R.m[a][1] = c2[a];
            R.m[a][2] = c3[a];
        }
        return R;
    }

    Vec3 RotationMatrix::apply(const Vec3 &v) const
    {
        Vec3 r{};
        for (int a = 0; a < 3; ++a)
            r[a] = m[a][0] * v[0] + m[a][1] * v[1] + m[a][2] * v[2];
        return r;
    }

    Vec3 RotationMatrix::apply_transpose(const Vec3 &v) const
    {
        Vec3 r{};
        for (int a = 0; a < 3; ++a)
            r[a] = m[0][a] * v[0] + m[1][a] * v[1] + m[2][a] * v[2];
        return r;
    }

    double RotationMatrix::determinant() const
    {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    double RotationMatrix::orthogonality_error() const
    {
        double worst = 0.0;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
            {
                double s = 0.0;
                for (int k = 0; k < 3; ++k)
                    s += m[k][a] * m[k][b];
                worst = std::max(worst, std::fabs(s - (a == b ? 1.0 : 0.0)));
            }
        return worst;
    }

    RotationMatrix RotationMatrix::operator*(const RotationMatrix &o) const
    {
        RotationMatrix r;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                r.m[a][b] = m[a][0] * o.m[0][b] + m[a][1] * o.m[1][b] + m[a][2] * o.m[2][b];
        return r;
    }

    RotationMatrix rotation_matrix(const EulerAngles &angles)
    {
        const double ca = std::cos(angles.varphi), sa = std::sin(angles.varphi);
        const double cb = std::cos(angles.vartheta), sb = std::sin(angles.vartheta);
        const double cg = std::cos(angles.omega), sg = std::sin(angles.omega);

        RotationMatrix Rz1, Ry, Rz2;
        Rz1.m = {{{ca, -sa, 0.0}, {sa, ca, 0.0}, {0.0, 0.0, 1.0}}};
        Ry.m = {{{cb, 0.0, sb}, {0.0, 1.0, 0.0}, {-sb, 0.0, cb}}};
        Rz2.m = {{{cg, -sg, 0.0}, {sg, cg, 0.0}, {0.0, 0.0, 1.0}}};
        return Rz1 * Ry * Rz2;
    }

    // ---- Legendre and spherical harmonics ---------------------------------

    std::vector<double> normalized_legendre(int L, double x)
    {
        if (L < 0)
            throw std::domain_error("normalized_legendre: negative degree");
        if (!(std::fabs(x) <= 1.0))
            throw std::domain_error("normalized_legendre: |x| > 1");

        std::vector<double> P(static_cast<std::size_t>(L + 1) * (L + 2) / 2, 0.0);
        const double s = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));

        double pmm = 1.0 / std::sqrt(4.0 * M_PI);
        for (int m = 0; m <= L; ++m)
        {
            if (m > 0)
                pmm *= -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s;
            P[legendre_index(m, m)] = pmm;
            if (m == L)
                break;
            double p2 = pmm;
            double p1 = std::sqrt(2.0 * m + 3.0) * x * pmm;
            P[legendre_index(m + 1, m)] = p1;
            for (int ell = m + 2; ell <= L; ++ell)
            {
                const double l2 = double(ell) * ell, m2 = double(m) * m, lm1 = ell - 1.0;
                const double a = std::sqrt((4.0 * l2 - 1.0) / (l2 - m2));
                const double b = std::sqrt((lm1 * lm1 - m2) / (4.0 * lm1 * lm1 - 1.0));
                const double p = a * (x * p1 - b * p2);
                P[legendre_index(ell, m)] = p;
                p2 = p1;
                p1 = p;
            }
        }
        return P;
    }

    namespace
    {
        // N_ell^m P_ell^m(x) for a single (ell, m)
        double normalized_legendre_single(int ell, int m, double x)
        {
            const double s = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
            double pmm = 1.0 / std::sqrt(4.0 * M_PI);
            for (int k = 1; k <= m; ++k)
                pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
            if (ell == m)
                return pmm;
            double p2 = pmm;
            double p1 = std::sqrt(2.0 * m + 3.0) * x * pmm;
            for (int l = m + 2; l <= ell; ++l)
            {
                const double l2 = double(l) * l, m2 = double(m) * m, lm1 = l - 1.0;
                const double a = std::sqrt((4.0 * l2 - 1.0) / (l2 - m2));
                const double b = std::sqrt((lm1 * lm1 - m2) / (4.0 * lm1 * lm1 - 1.0));
                const double p = a * (x * p1 - b * p2);
                p2 = p1;
                p1 = p;
            }
            return p1;
        }
    }

    double assoc_legendre(int ell, int m, double x)
    {
        if (ell < 0 || m < 0 || m > ell)
            throw std::domain_error("assoc_legendre: require 0 <= m <= ell");
        if (!(std::fabs(x) <= 1.0))
            throw std::domain_error("assoc_legendre: |x| > 1");
        const double pbar = normalized_legendre_single(ell, m, x);
        // divide by N_ell^m = sqrt((2 ell + 1) / (4 pi) (ell - m)! / (ell + m)!)
        const double log_ratio = std::lgamma(ell + m + 1.0) - std::lgamma(ell - m + 1.0);
        return pbar * std::sqrt(4.0 * M_PI / (2.0 * ell + 1.0)) * std::exp(0.5 * log_ratio);
    }

    cdouble ylm(int ell, int m, const Direction &dir)
    {
        if (ell < 0 || m < -ell || m > ell)
            throw std::domain_error("ylm: require |m| <= ell");
        const int am = std::abs(m);
        const double pbar = normalized_legendre_single(ell, am, std::cos(dir.theta()));
        const cdouble y = std::polar(pbar, am * dir.phi());
        return m >= 0 ? y : parity_sign(am) * std::conj(y);
    }

    cdouble synthesize(const CoeffTable &coeffs, const Direction &dir)
    {
        const int L = coeffs.band_limit();
        const auto P = normalized_legendre(L, std::cos(dir.theta()));
        std::vector<cdouble> eimp(static_cast<std::size_t>(L) + 1);
        for (int m = 0; m <= L; ++m)
            eimp[m] = std::polar(1.0, m * dir.phi());

        cdouble sum = 0.0;
        for (int ell = 0; ell <= L; ++ell)
        {
            sum += coeffs(ell, 0) * P[legendre_index(ell, 0)];
            for (int m = 1; m <= ell; ++m)
            {
                const double p = P[legendre_index(ell, m)];
                sum += p * (coeffs(ell, m) * eimp[m] + parity_sign(m) * coeffs(ell, -m) * std::conj(eimp[m]));
            }
        }
        return sum;
    }

    std::vector<cdouble> synthesize_ring(const CoeffTable &coeffs, double theta, std::span<const double> phis)
    {
        const int L = coeffs.band_limit();
        const auto P = normalized_legendre(L, std::cos(theta));

        // a_m = sum_ell f_ell^m Pbar_ell^m(cos theta), m in [-L, L]
        std::vector<cdouble> a(static_cast<std::size_t>(2 * L + 1), 0.0);
        for (int ell = 0; ell <= L; ++ell)
        {
            a[L] += coeffs(ell, 0) * P[legendre_index(ell, 0)];
            for (int m = 1; m <= ell; ++m)
            {
                const double p = P[legendre_index(ell, m)];
                a[L + m] += coeffs(ell, m) * p;
                a[L - m] += coeffs(ell, -m) * (parity_sign(m) * p);
            }
        }

        std::vector<cdouble> out(phis.size());
        for (std::size_t k = 0; k < phis.size(); ++k)
        {
            cdouble s = a[L];
            for (int m = 1; m <= L; ++m)
            {
                const cdouble e = std::polar(1.0, m * phis[k]);
                s += a[L + m] * e + a[L - m] * std::conj(e);
            }
            out[k] = s;
        }
        return out;
    }
}
