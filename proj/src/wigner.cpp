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

#include <cmath>
#include <stdexcept>

namespace fbharm
{
    namespace
    {
        double parity_sign(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

        // i^k for any integer k
        cdouble i_pow(int k)
        {
            switch (((k % 4) + 4) % 4)
            {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
            }
        }
    }

    WignerPi2Table::WignerPi2Table(int L) : L_(L)
    {
        if (L < 0)
            throw std::invalid_argument("WignerPi2Table: negative band-limit");
        data_.assign(offset(L + 1), 0.0);

        data_[0] = 1.0;
        for (int ell = 1; ell <= L; ++ell)
        {
            const std::size_t cur = offset(ell), prev = offset(ell - 1);
            auto at = [&](int u, int m) -> double & { return data_[cur + static_cast<std::size_t>(u * (u + 1) / 2 + m)]; };
            auto prev_at = [&](int u, int m) { return data_[prev + static_cast<std::size_t>(u * (u + 1) / 2 + m)]; };

            const double l = ell;
            at(ell, 0) = -std::sqrt((2.0 * l - 1.0) / (2.0 * l)) * prev_at(ell - 1, 0);
            for (int mp = 1; mp <= ell; ++mp)
                at(ell, mp) = std::sqrt(l * (2.0 * l - 1.0) / (2.0 * (l + mp) * (l + mp - 1.0))) * prev_at(ell - 1, mp - 1);

            // walk down the first index for every column
            for (int mp = 0; mp < ell; ++mp)
            {
                double upper = 0.0; // d_{m+1, m'}
                for (int m = ell; m > mp; --m)
                {
                    const double here = at(m, mp);
                    const double a = 2.0 * mp / std::sqrt((l - m + 1.0) * (l + m));
                    const double b = std::sqrt((l - m) * (l + m + 1.0) / ((l - m + 1.0) * (l + m)));
                    at(m - 1, mp) = a * here - b * upper;
                    upper = here;
                }
            }
        }
    }

    double WignerPi2Table::operator()(int ell, int u, int m) const
    {
        if (ell < 0 || ell > L_ || u < -ell || u > ell || m < -ell || m > ell)
            throw std::out_of_range("WignerPi2Table: index outside table");

        double sign = 1.0;
        if (u < 0 && m < 0)
        {
            u = -u;
            m = -m;
            sign *= parity_sign(u - m);
        }
        else if (m < 0)
        {
            m = -m;
            sign *= parity_sign(ell + u);
        }
        else if (u < 0)
        {
            u = -u;
            sign *= parity_sign(ell + m);
        }
        if (u < m)
        {
            std::swap(u, m);
            sign *= parity_sign(u - m);
        }
        return sign * eighth(ell, u, m);
    }

    void WignerPi2Table::fill_block(int ell, std::vector<double> &out) const
    {
        const int n = 2 * ell + 1;
        out.resize(static_cast<std::size_t>(n) * n);
        for (int u = -ell; u <= ell; ++u)
            for (int m = -ell; m <= ell; ++m)
                out[static_cast<std::size_t>(u + ell) * n + (m + ell)] = (*this)(ell, u, m);
    }

    double wigner_d(int ell, int m, int mprime, double theta, const WignerPi2Table &table)
    {
        if (ell < 0 || m < -ell || m > ell || mprime < -ell || mprime > ell)
            throw std::domain_error("wigner_d: require |m|, |m'| <= ell");
        if (ell > table.band_limit())
            throw std::invalid_argument("wigner_d: degree exceeds table band-limit");

        cdouble s = 0.0;
        for (int u = -ell; u <= ell; ++u)
            s += table(ell, u, m) * table(ell, u, mprime) * std::polar(1.0, u * theta);
        return (i_pow(mprime - m) * s).real();
    }

    CoeffTable rotate_coeffs(const CoeffTable &coeffs, const EulerAngles &angles, const WignerPi2Table &table)
    {
        const int L = coeffs.band_limit();
        if (table.band_limit() < L)
            throw std::invalid_argument("rotate_coeffs: Wigner table band-limit below coefficient band-limit");

        CoeffTable out(L, coeffs.real_valued());
        std::vector<double> D;
        std::vector<cdouble> x, y;
        for (int ell = 0; ell <= L; ++ell)
        {
            const int n = 2 * ell + 1;
            table.fill_block(ell, D);
            x.assign(n, 0.0);
            y.assign(n, 0.0);

            for (int mp = -ell; mp <= ell; ++mp)
                x[mp + ell] = i_pow(mp) * std::polar(1.0, -mp * angles.omega) * coeffs(ell, mp);

            for (int u = -ell; u <= ell; ++u)
            {
                cdouble s = 0.0;
                const double *row = &D[static_cast<std::size_t>(u + ell) * n];
                for (int k = 0; k < n; ++k)
                    s += row[k] * x[k];
                y[u + ell] = s * std::polar(1.0, u * angles.vartheta);
            }

            for (int m = -ell; m <= ell; ++m)
            {
                cdouble s = 0.0;
                for (int u = 0; u < n; ++u)
                    s += D[static_cast<std::size_t>(u) * n + (m + ell)] * y[u];
                out(ell, m) = std::polar(1.0, -m * angles.varphi) * i_pow(-m) * s;
            }
        }
        return out;
    }
}
