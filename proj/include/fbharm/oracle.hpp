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

#ifndef FBHARM_ORACLE_HPP
#define FBHARM_ORACLE_HPP

#include "fbharm/fb5.hpp"
#include "fbharm/sht.hpp"

#include <functional>
#include <vector>

namespace fbharm
{
    struct QuadratureNode
    {
        Direction dir;
        double weight = 0.0;
    };

    // Gauss-Legendre in cos(theta) times a uniform grid in phi. The rule integrates products
    // of harmonics up to total degree `order` exactly.
    struct QuadratureRule
    {
        int order = 0;
        std::vector<double> theta;        // ring co-latitudes
        std::vector<double> ring_weight;  // Gauss-Legendre weights
        int nphi = 0;                     // points per ring, phi_k = 2 pi k / nphi

        std::vector<QuadratureNode> nodes() const;
        double phi(int k) const;
        std::size_t size() const { return theta.size() * static_cast<std::size_t>(nphi); }
    };

    // Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
    void gauss_legendre(int n, std::vector<double> &x, std::vector<double> &w);

    // L + 1 rings x (2 L + 2) longitudes; order = 2 L + 1.
    QuadratureRule quadrature_nodes(int L);

    using SphereFunction = std::function<cdouble(const Direction &)>;
    using RealSphereFunction = std::function<double(const Direction &)>;

    // sum_nodes f conj(Y_ell^m) w for ell <= L; requires rule.order >= 2 L.
    CoeffTable numeric_sht(const SphereFunction &f, int L, const QuadratureRule &rule);
    CoeffTable numeric_sht(const RealSphereFunction &f, int L, const QuadratureRule &rule);

    // sum_nodes h(x) e^{i k (z_p - z_q).x} w
    cdouble sfc_numeric(const MixtureModel &model, const Vec3 &zp, const Vec3 &zq, double lambda, const QuadratureRule &rule);

    // Mean squared difference between the density and its degree-L expansion over the L x L
    // equiangular grid theta_j = pi (2j + 1) / (2L), phi_k = 2 pi k / L.
    double spatial_error(double kappa, double beta, int L);

    // Same, with the expansion taken from a (possibly larger) precomputed table truncated to degree L.
    double spatial_error(const CoeffTable &coeffs, double kappa, double beta, int L);
}

#endif
