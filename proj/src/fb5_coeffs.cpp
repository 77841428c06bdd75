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

#include "detail/mod_sph_bessel.hpp"
#include "detail/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace fbharm
{
    namespace
    {
        using detail::quad;

        // Fourier coefficients of e^{kappa (cos theta - 1)} truncated at degree N:
        //   E(u) = sum_{n >= u, n = u mod 2} (2n + 1) e^{-kappa} i_n(kappa) (d^n_{u,0}(pi/2))^2
        // with (d^n_{u,0}(pi/2))^2 = w_{(n+u)/2} w_{(n-u)/2},  w_k = C(2k, k) / 4^k.
        std::vector<quad> cos_fourier(int N, double kappa)
        {
            // The downward recurrence starts from a level fixed by kappa alone, so every policy with
            // N below it sees bit-identical Bessel values and only the truncated terms differ.
            const int start = std::max(N, static_cast<int>(std::ceil(1.5 * kappa)) + 160);
            const auto is = detail::scaled_mod_sph_bessel<quad>(start, quad(kappa));
            std::vector<quad> w(static_cast<std::size_t>(N) + 1);
            w[0] = 1;
            for (int k = 1; k <= N; ++k)
                w[k] = w[k - 1] * quad(2 * k - 1) / quad(2 * k);

            std::vector<quad> E(static_cast<std::size_t>(N) + 1, quad(0));
            for (int u = 0; u <= N; ++u)
            {
                quad s = 0;
                for (int n = u; n <= N; n += 2)
                    s += quad(2 * n + 1) * is[n] * w[(n + u) / 2] * w[(n - u) / 2];
                E[u] = s;
            }
            return E;
        }

        // Re(i^s) g(p, s) for s = 0..smax where G(p, s) = int_0^pi sin^p(t) e^{i s t} dt = i^s g(p, s).
        // Only even s have a real part; odd entries are left at zero.
        void real_part_g(int p, int smax, std::vector<quad> &out)
        {
            out.assign(static_cast<std::size_t>(smax) + 1, quad(0));
            // Wallis integral W_p = int_0^pi sin^p
            quad wp = (p % 2 == 0) ? M_PIq : quad(2);
            for (int k = (p % 2 == 0) ? 2 : 3; k <= p; k += 2)
                wp = wp * quad(k - 1) / quad(k);

            quad g = wp;
            for (int s = 0; s <= smax; s += 2)
            {
                out[s] = (s % 4 == 0) ? g : -g;
                g = g * quad(p - s) / quad(p + s + 2);
            }
        }

        void check_params(double kappa, double beta, int L, const WignerPi2Table &table, const TruncationPolicy &policy)
        {
            FB5Params::standard(kappa, beta).validate();
            if (L < 0)
                throw std::invalid_argument("standard_fb_coeffs: negative band-limit");
            if (table.band_limit() < L)
                throw std::invalid_argument("standard_fb_coeffs: Wigner table band-limit below L");
            if (policy.N < 0 || policy.T < 0)
                throw std::invalid_argument("standard_fb_coeffs: negative truncation level");
        }
    }

    CoeffTable standard_fb_coeffs(double kappa, double beta, int L, const WignerPi2Table &table, const TruncationPolicy &policy)
    {
        check_params(kappa, beta, L, table, policy);
        const int N = policy.N, T = policy.T;

        const auto E = cos_fourier(N, kappa);

        // Re J(p, q) = Re sum_{|u| <= N} E(|u|) G(p, u + q) for odd p = 4t + m + 1 and q = 0..L
        const int pmax = 4 * T + L + 1;
        const int smax = N + L;
        const int npos = (pmax + 1) / 2; // p = 1, 3, ..., pmax
        std::vector<std::vector<quad>> J(static_cast<std::size_t>(npos));
        std::vector<quad> gr;
        for (int ip = 0; ip < npos; ++ip)
        {
            const int p = 2 * ip + 1;
            real_part_g(p, smax, gr);
            auto &row = J[ip];
            row.assign(static_cast<std::size_t>(L) + 1, quad(0));
            for (int q = 0; q <= L; ++q)
            {
                // u + q even, |u| <= N, summed outwards from u = 0
                const int a0 = q % 2;
                quad s = (a0 == 0) ? E[0] * gr[q] : quad(0);
                for (int a = (a0 == 0 ? 2 : 1); a <= N; a += 2)
                {
                    const int lo = q - a;
                    s += E[a] * (gr[q + a] + gr[lo < 0 ? -lo : lo]);
                }
                row[q] = s;
            }
        }

        const double scaled_c = normalization_scaled(kappa, beta);
        CoeffTable out(L, true);
        std::vector<double> Q(static_cast<std::size_t>(L) + 1);
        const quad half_beta = quad(beta) / 2;

        // c_0^m = (beta/2)^{m/2} / (m/2)!
        quad c0 = 1;
        for (int m = 0; m <= L; m += 2)
        {
            if (m > 0)
                c0 = c0 * half_beta / quad(m / 2);

            // Re Q_m(q) = sum_t c_t^m Re J(4t + m + 1, q),  c_t^m = (beta/2)^{2t + m/2} / (t! (t + m/2)!)
            std::vector<quad> acc(static_cast<std::size_t>(L) + 1, quad(0));
            quad c = c0;
            for (int t = 0; t <= T; ++t)
            {
                if (t > 0)
                    c = c * half_beta * half_beta / (quad(t) * quad(t + m / 2));
                if (c == 0)
                    break;
                const auto &row = J[(4 * t + m) / 2];
                for (int q = 0; q <= L; ++q)
                    acc[q] += c * row[q];
            }
            for (int q = 0; q <= L; ++q)
                Q[q] = static_cast<double>(acc[q]);

            // f_ell^m = sqrt(pi (2 ell + 1)) i^{-m} / (e^{-kappa} C) sum_q d_{q,0} d_{q,m} Q_m(q)
            const double phase = (m / 2) % 2 == 0 ? 1.0 : -1.0;
            for (int ell = m; ell <= L; ++ell)
            {
                double s = table(ell, 0, 0) * table(ell, 0, m) * Q[0];
                for (int q = 1; q <= ell; ++q)
                    s += 2.0 * table(ell, q, 0) * table(ell, q, m) * Q[q];
                const double v = std::sqrt(M_PI * (2.0 * ell + 1.0)) * phase * s / scaled_c;
                out(ell, m) = v;
                if (m > 0)
                    out(ell, -m) = v; // (-1)^m conj(v) with m even and v real
            }
        }
        return out;
    }

    CoeffTable standard_fb_coeffs(double kappa, double beta, int L, const WignerPi2Table &table)
    {
        return standard_fb_coeffs(kappa, beta, L, table, TruncationPolicy::for_params(kappa, beta));
    }

    CoeffTable fb5_coeffs(const FB5Params &params, int L, const WignerPi2Table &table, const TruncationPolicy &policy)
    {
        params.validate();
        const CoeffTable standard = standard_fb_coeffs(params.kappa, params.beta, L, table, policy);
        return rotate_coeffs(standard, euler_from_rotation(frame_to_rotation(params)), table);
    }

    CoeffTable fb5_coeffs(const FB5Params &params, int L, const WignerPi2Table &table)
    {
        return fb5_coeffs(params, L, table, TruncationPolicy::for_params(params.kappa, params.beta));
    }

    CoeffTable mixture_coeffs(const MixtureModel &model, int L, const WignerPi2Table &table)
    {
        model.validate();
        CoeffTable total(L, true);
        for (const auto &c : model.components)
        {
            CoeffTable part = fb5_coeffs(c.params, L, table);
            part *= c.weight;
            total += part;
        }
        return total;
    }
}
