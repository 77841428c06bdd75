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

#ifndef FBHARM_SHT_HPP
#define FBHARM_SHT_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fbharm
{
    using Vec3 = std::array<double, 3>;
    using cdouble = std::complex<double>;

    inline double dot(const Vec3 &a, const Vec3 &b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
    double norm(const Vec3 &a);

    // Point on the unit sphere: co-latitude theta in [0, pi], longitude phi in [0, 2 pi).
    class Direction
    {
    public:
        Direction() = default;

        // Angles outside the canonical ranges are folded back onto the same point.
        Direction(double theta, double phi);

        // Direction of a non-zero vector (need not be normalised).
        static Direction from_vector(const Vec3 &v);

        double theta() const { return theta_; }
        double phi() const { return phi_; }

        // [sin(theta) cos(phi), sin(theta) sin(phi), cos(theta)]
        Vec3 unit_vector() const;

    private:
        double theta_ = 0.0;
        double phi_ = 0.0;
    };

    // Dense spherical-harmonic coefficient table f_ell^m, 0 <= ell <= L, |m| <= ell,
    // stored flat at index ell (ell + 1) + m.
    class CoeffTable
    {
    public:
        CoeffTable() = default;
        explicit CoeffTable(int band_limit, bool real_valued = false);

        int band_limit() const { return L_; }
        std::size_t size() const { return data_.size(); }

        static constexpr std::size_t index(int ell, int m) { return static_cast<std::size_t>(ell * (ell + 1) + m); }

        cdouble &operator()(int ell, int m) { return data_[index(ell, m)]; }
        const cdouble &operator()(int ell, int m) const { return data_[index(ell, m)]; }

        // Bounds-checked access; throws std::out_of_range.
        const cdouble &at(int ell, int m) const;

        std::span<const cdouble> data() const { return data_; }
        std::span<cdouble> data() { return data_; }

        // True when the table holds the expansion of a real-valued function, i.e. the
        // conjugate symmetry f_ell^{-m} = (-1)^m conj(f_ell^m) is expected to hold.
        bool real_valued() const { return real_valued_; }
        void set_real_valued(bool v) { real_valued_ = v; }

        // Copy restricted (or zero-padded) to a different band-limit.
        CoeffTable with_band_limit(int L) const;

        // sum_m |f_ell^m|^2
        double degree_power(int ell) const;

        // Largest |f_ell^{-m} - (-1)^m conj(f_ell^m)| over the table.
        double conjugate_symmetry_error() const;

        CoeffTable &operator+=(const CoeffTable &other);
        CoeffTable &operator*=(double s);

    private:
        int L_ = 0;
        bool real_valued_ = false;
        std::vector<cdouble> data_ = std::vector<cdouble>(1);
    };

    // zyz Euler angles (varphi, vartheta, omega); R = Rz(varphi) Ry(vartheta) Rz(omega).
    struct EulerAngles
    {
        double varphi = 0.0;   // [0, 2 pi)
        double vartheta = 0.0; // [0, pi]
        double omega = 0.0;    // [0, 2 pi)

        EulerAngles() = default;
        EulerAngles(double varphi, double vartheta, double omega);
    };

    struct RotationMatrix
    {
        std::array<std::array<double, 3>, 3> m{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};

        // 1-based access matching the usual R_{a,b} notation.
        double operator()(int row, int col) const { return m[row - 1][col - 1]; }

        static RotationMatrix from_columns(const Vec3 &c1, const Vec3 &c2, const Vec3 &c3);
        Vec3 column(int col) const { return {m[0][col - 1], m[1][col - 1], m[2][col - 1]}; }

        Vec3 apply(const Vec3 &v) const;            // R v
        Vec3 apply_transpose(const Vec3 &v) const;  // R^T v = R^{-1} v
        double determinant() const;
        double orthogonality_error() const;         // max |R^T R - I|
        RotationMatrix operator*(const RotationMatrix &o) const;
    };

    // Table of Wigner d^ell_{u,m}(pi/2) for ell <= L built by the Trapani-Navaza recursion
    // (each block from the previous degree). Only the eighth 0 <= m <= u <= ell is stored; the
    // remaining entries follow from the symmetries of d(pi/2).
    class WignerPi2Table
    {
    public:
        explicit WignerPi2Table(int L);

        int band_limit() const { return L_; }

        // d^ell_{u,m}(pi/2), |u|, |m| <= ell <= L
        double operator()(int ell, int u, int m) const;

        // Full (2 ell + 1) x (2 ell + 1) block, row-major over (u + ell, m + ell).
        void fill_block(int ell, std::vector<double> &out) const;

    private:
        static std::size_t offset(int ell) { return static_cast<std::size_t>(ell) * (ell + 1) * (ell + 2) / 6; }
        double eighth(int ell, int u, int m) const { return data_[offset(ell) + static_cast<std::size_t>(u * (u + 1) / 2 + m)]; }

        int L_;
        std::vector<double> data_;
    };

    // Associated Legendre function P_ell^m(x), Condon-Shortley phase included, 0 <= m <= ell.
    double assoc_legendre(int ell, int m, double x);

    // Orthonormalised associated Legendre values N_ell^m P_ell^m(x) for 0 <= m <= ell <= L,
    // stored at ell (ell + 1) / 2 + m. Computed by the stable normalised recurrence.
    std::vector<double> normalized_legendre(int L, double x);
    inline std::size_t legendre_index(int ell, int m) { return static_cast<std::size_t>(ell * (ell + 1) / 2 + m); }

    // Y_ell^m(theta, phi) = N_ell^m P_ell^m(cos theta) e^{i m phi}
    cdouble ylm(int ell, int m, const Direction &dir);

    inline WignerPi2Table wigner_pi2_table(int L) { return WignerPi2Table(L); }

    // d^ell_{m,m'}(theta) from the complex-exponential expansion through d(pi/2).
    double wigner_d(int ell, int m, int mprime, double theta, const WignerPi2Table &table);

    RotationMatrix rotation_matrix(const EulerAngles &angles);

    // Coefficients of f(R^{-1} x): out_ell^m = sum_m' e^{-i m varphi} d^ell_{m,m'}(vartheta) e^{-i m' omega} in_ell^m'.
    CoeffTable rotate_coeffs(const CoeffTable &coeffs, const EulerAngles &angles, const WignerPi2Table &table);

    // sum_{ell <= L} sum_m f_ell^m Y_ell^m(dir)
    cdouble synthesize(const CoeffTable &coeffs, const Direction &dir);

    // Synthesis on one co-latitude ring, O(L^2 + L * phis.size()).
    std::vector<cdouble> synthesize_ring(const CoeffTable &coeffs, double theta, std::span<const double> phis);
}

#endif
