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

#include "fbharm/validation.hpp"
#include "fbharm/fb5.hpp"
#include "fbharm/oracle.hpp"
#include "fbharm/sfc.hpp"
#include "fbharm/specfun.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <utility>

namespace fbharm
{
    namespace
    {
        using Clock = std::chrono::steady_clock;
        using Pair = std::pair<double, double>;

        double seconds_since(Clock::time_point t0)
        {
            return std::chrono::duration<double>(Clock::now() - t0).count();
        }

        std::string fmt(const char *f, double a, double b)
        {
            char buf[96];
            std::snprintf(buf, sizeof buf, f, a, b);
            return buf;
        }

        CheckResult row(std::string name, double err, double tol, std::string detail = {})
        {
            return {std::move(name), err, tol, err <= tol, std::move(detail)};
        }

        std::vector<Pair> params_or(const ValidationOptions &o, std::vector<Pair> dflt)
        {
            if (o.kappa || o.beta)
                return {{o.kappa.value_or(0.0), o.beta.value_or(0.0)}};
            return dflt;
        }

        double max_abs_diff(const CoeffTable &a, const CoeffTable &b)
        {
            double e = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i)
                e = std::max(e, std::abs(a.data()[i] - b.data()[i]));
            return e;
        }

        RotationMatrix random_rotation(std::mt19937_64 &rng)
        {
            std::normal_distribution<double> n01;
            double q[4];
            double s = 0.0;
            for (double &v : q)
            {
                v = n01(rng);
                s += v * v;
            }
            s = std::sqrt(s);
            const double w = q[0] / s, x = q[1] / s, y = q[2] / s, z = q[3] / s;
            RotationMatrix R;
            R.m = {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
                    {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
                    {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
            return R;
        }

        Direction random_direction(std::mt19937_64 &rng)
        {
            std::normal_distribution<double> n01;
            return Direction::from_vector({n01(rng), n01(rng), n01(rng)});
        }

        double angle_gap(double a, double b)
        {
            const double d = std::fmod(std::fabs(a - b), 2.0 * M_PI);
            return std::min(d, 2.0 * M_PI - d);
        }

        std::vector<double> linspace(double a, double b, int n)
        {
            std::vector<double> v(n);
            for (int i = 0; i < n; ++i)
                v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
            return v;
        }

        // ---- 1: closed-form coefficients vs quadrature ------------------------

        std::vector<CheckResult> check_coeff_oracle(const ValidationOptions &o)
        {
            constexpr int L = 40;
            constexpr int rule_degree = 160;
            const double tol = o.tol.value_or(1.0e-10);

            const auto t0 = Clock::now();
            const WignerPi2Table table(L);
            const QuadratureRule rule = quadrature_nodes(rule_degree);
            std::vector<CheckResult> out;
            for (const auto &[kappa, beta] : params_or(o, {{25.0, 10.0}, {100.0, 10.0}, {100.0, 49.0}}))
            {
                const CoeffTable closed = standard_fb_coeffs(kappa, beta, L, table);
                const FB5Density f(FB5Params::standard(kappa, beta));
                const CoeffTable numeric = numeric_sht(RealSphereFunction([&f](const Direction &d) { return f(d); }), L, rule);
                out.push_back(row(fmt("coeff-oracle kappa=%g beta=%g", kappa, beta), max_abs_diff(closed, numeric), tol, "L=40"));
            }
            out.push_back(row("coeff-oracle runtime [s]", seconds_since(t0), 60.0));
            return out;
        }

        // ---- 2: spatial error convergence -------------------------------------

        std::vector<CheckResult> check_spatial_error(const ValidationOptions &o)
        {
            const auto t0 = Clock::now();
            std::vector<CheckResult> out;
            for (const auto &[kappa, beta] : params_or(o, {{25.0, 10.0}, {100.0, 49.0}}))
            {
                const bool moderate = (kappa == 25.0 && beta == 10.0);
                const int Lmax = moderate ? 150 : 200;
                const double plateau_tol = o.tol.value_or(moderate ? 1.0e-18 : 1.0e-16);

                const CoeffTable c = standard_fb_coeffs(kappa, beta, Lmax, WignerPi2Table(Lmax));
                std::string curve;
                double first = 0.0, plateau = 0.0;
                for (int L = 10; L <= Lmax; L += 10)
                {
                    const double e = spatial_error(c, kappa, beta, L);
                    if (L == 10)
                        first = e;
                    if (L >= Lmax - 20)
                        plateau = std::max(plateau, e);
                    char buf[48];
                    std::snprintf(buf, sizeof buf, "%sL=%d:%.2e", curve.empty() ? "" : " ", L, e);
                    curve += buf;
                }
                out.push_back(row(fmt("spatial-error plateau kappa=%g beta=%g", kappa, beta), plateau, plateau_tol, curve));
                if (moderate)
                {
                    // eps(150) / eps(10) must be at most 1e-10
                    const double last = spatial_error(c, kappa, beta, 150);
                    out.push_back(row("spatial-error drop L=10..150 kappa=25 beta=10", last / first, 1.0e-10));
                }
            }
            out.push_back(row("spatial-error runtime [s]", seconds_since(t0), 300.0));
            return out;
        }

        // ---- 3: truncation heuristics -----------------------------------------

        std::vector<CheckResult> check_truncation(const ValidationOptions &o)
        {
            std::vector<CheckResult> out;
            const double tol = o.tol.value_or(1.0e-16);

            std::vector<double> kappas{1.0, 10.0, 25.0, 50.0, 100.0};
            std::vector<double> betas{5.0, 10.0, 25.0, 49.0};
            if (o.kappa)
                kappas = {*o.kappa};
            if (o.beta)
                betas = {*o.beta};

            for (double kappa : kappas)
            {
                // I_{N+1/2}(kappa) = e^{kappa} * scaled value, formed in logarithms
                const int N = truncation_n(kappa);
                const auto seq = scaled_bessel_i_half(N, kappa);
                const double last = seq.values[N];
                const double value = last > 0.0 ? std::pow(10.0, std::log10(last) + kappa / std::log(10.0)) : 0.0;
                out.push_back(row(fmt("truncation-n I_{N+1/2}(kappa) kappa=%g N=%g", kappa, N), value, tol));
            }
            for (double beta : betas)
            {
                const int T = truncation_t(beta);
                out.push_back(row(fmt("truncation-t S(beta,T) beta=%g T=%g", beta, T), std::pow(10.0, truncation_term_log10(beta, T)), tol));
            }

            constexpr int L = 40;
            const WignerPi2Table table(L);
            for (const auto &[kappa, beta] : params_or(o, {{25.0, 10.0}, {100.0, 10.0}, {100.0, 49.0}}))
            {
                const TruncationPolicy base = TruncationPolicy::for_params(kappa, beta);
                const TruncationPolicy wide{base.N + 50, base.T + 50};
                const double diff = max_abs_diff(standard_fb_coeffs(kappa, beta, L, table, base), standard_fb_coeffs(kappa, beta, L, table, wide));
                out.push_back(row(fmt("truncation-sufficiency N+50,T+50 kappa=%g beta=%g", kappa, beta), diff, 1.0e-15));
            }
            return out;
        }

        // ---- 4: SFC closed form vs numerical integration ----------------------

        std::vector<CheckResult> check_sfc_oracle(const ValidationOptions &o)
        {
            const auto t0 = Clock::now();
            const double kappa = o.kappa.value_or(25.0), beta = o.beta.value_or(10.0);
            const double tol = o.tol.value_or(1.0e-8);
            const double lambda = 1.0;
            const MixtureModel model = MixtureModel::single(FB5Params::standard(kappa, beta));
            const auto grid = linspace(0.01, 2.0, 50);

            struct Case
            {
                std::string name;
                GeometryBuilder build;
                int p, q;
            };
            const std::vector<Case> cases{
                {"uca16 pair (2,3)", uca_builder(16), 2, 3},
                {"rda pair (1," + std::to_string(nearest_neighbor(rda_positions(1.0), 1)) + ")", rda_builder(), 1, nearest_neighbor(rda_positions(1.0), 1)}};

            // coefficients once, at the band-limit needed by the largest separation
            double kd_max = 0.0;
            for (const auto &c : cases)
            {
                const auto g = c.build(grid.back() * lambda);
                const Vec3 &a = g.element(c.p), &b = g.element(c.q);
                kd_max = std::max(kd_max, 2.0 * M_PI / lambda * norm({a[0] - b[0], a[1] - b[1], a[2] - b[2]}));
            }
            const auto tc = Clock::now();
            const SfcEvaluator eval(model, ell_truncation(kd_max, 1.0e-14));
            const double coeff_time = seconds_since(tc);

            std::vector<std::vector<Vec3>> seps(cases.size());
            for (std::size_t i = 0; i < cases.size(); ++i)
                for (double r : grid)
                {
                    const auto g = cases[i].build(r * lambda);
                    const Vec3 &a = g.element(cases[i].p), &b = g.element(cases[i].q);
                    seps[i].push_back({a[0] - b[0], a[1] - b[1], a[2] - b[2]});
                }

            std::vector<std::vector<cdouble>> closed(cases.size());
            for (std::size_t i = 0; i < cases.size(); ++i)
                closed[i] = sfc_curve(eval, cases[i].build, cases[i].p, cases[i].q, lambda, grid).rho;

            std::vector<CheckResult> out;
            const QuadratureRule reference = quadrature_nodes(96);
            for (std::size_t i = 0; i < cases.size(); ++i)
            {
                double err = 0.0;
                for (std::size_t k = 0; k < grid.size(); ++k)
                    err = std::max(err, std::abs(closed[i][k] - sfc_numeric(model, seps[i][k], {0.0, 0.0, 0.0}, lambda, reference)));
                out.push_back(row("sfc-oracle " + cases[i].name, err, tol, "50 points R/lambda in [0.01, 2]"));
            }

            // cheapest quadrature reaching the tolerance on every point
            int chosen = -1;
            double oracle_time = 0.0;
            for (int deg : {12, 16, 20, 24, 28, 32, 40, 48, 64, 96})
            {
                const QuadratureRule rule = quadrature_nodes(deg);
                const auto ts = Clock::now();
                double err = 0.0;
                for (std::size_t i = 0; i < cases.size(); ++i)
                    for (std::size_t k = 0; k < grid.size(); ++k)
                        err = std::max(err, std::abs(closed[i][k] - sfc_numeric(model, seps[i][k], {0.0, 0.0, 0.0}, lambda, rule)));
                oracle_time = seconds_since(ts);
                if (err <= tol)
                {
                    chosen = deg;
                    break;
                }
            }

            // closed-form time for the same curves, repeated for a measurable interval; the per-point time
            // without shared angular sums is reported alongside
            const auto repeat = [](const auto &work) {
                int reps = 0;
                const auto ts = Clock::now();
                do
                {
                    work();
                    ++reps;
                } while (seconds_since(ts) < 0.2);
                return seconds_since(ts) / reps;
            };
            double sink = 0.0;
            const double closed_time = repeat([&] {
                for (const auto &c : cases)
                    sink += sfc_curve(eval, c.build, c.p, c.q, lambda, grid).rho.back().real();
            });
            const double pointwise_time = repeat([&] {
                for (const auto &s : seps)
                    for (const auto &dz : s)
                        sink += eval(dz, lambda).real();
            });
            (void)sink;

            const double ratio = chosen > 0 ? closed_time / oracle_time : 1.0;
            char detail[240];
            std::snprintf(detail, sizeof detail,
                          "oracle degree %d: %.3e s, closed form: %.3e s (pointwise %.3e s, +%.3e s coefficients) for %zu points",
                          chosen, oracle_time, closed_time, pointwise_time, coeff_time, 2 * grid.size());
            out.push_back(row("sfc-oracle time ratio closed/oracle", ratio, 0.01, detail));
            out.push_back(row("sfc-oracle runtime [s]", seconds_since(t0), 300.0));
            return out;
        }

        // ---- 5: structural zeros and constants -------------------------------

        std::vector<CheckResult> check_structural(const ValidationOptions &o)
        {
            constexpr int L = 40;
            const WignerPi2Table table(L);
            const double c00 = 1.0 / (2.0 * std::sqrt(M_PI));

            double err00 = 0.0, odd = 0.0;
            for (const auto &[kappa, beta] : params_or(o, {{0.0, 0.0}, {1.0, 0.5}, {10.0, 5.0}, {25.0, 10.0}, {50.0, 20.0}, {100.0, 10.0}, {100.0, 49.0}}))
            {
                const CoeffTable c = standard_fb_coeffs(kappa, beta, L, table);
                err00 = std::max(err00, std::abs(c(0, 0) - c00));
                for (int ell = 1; ell <= L; ++ell)
                    for (int m = 1; m <= ell; m += 2)
                        odd = std::max({odd, std::abs(c(ell, m)), std::abs(c(ell, -m))});
            }

            const MixtureModel fb = MixtureModel::single(FB5Params::standard(25.0, 10.0));
            const SfcEvaluator eval(fb, 40);
            const double zero_sep = std::abs(eval({0.0, 0.0, 0.0}, 1.0) - 1.0);

            const MixtureModel uniform = MixtureModel::single(FB5Params::standard(0.0, 0.0));
            const auto grid = linspace(0.0, 2.0, 50);
            const SfcCurve curve = sfc_curve(uniform, uca_builder(16), 2, 3, 1.0, grid);
            double j0err = 0.0;
            for (std::size_t k = 0; k < grid.size(); ++k)
            {
                const double kd = 2.0 * M_PI * 2.0 * grid[k] * std::sin(M_PI / 16.0);
                const double j0 = kd == 0.0 ? 1.0 : std::sin(kd) / kd;
                j0err = std::max(j0err, std::abs(curve.rho[k] - j0));
            }
            const double first = std::abs(curve.rho.front() - 1.0);

            return {row("structural entry(0,0) = 1/(2 sqrt(pi))", err00, o.tol.value_or(1.0e-12)),
                    row("structural odd-m entries exactly zero", odd, 0.0),
                    row("structural rho(0) = 1 exactly", std::max(zero_sep, first), 0.0),
                    row("structural uniform AoA rho = j0(kd)", j0err, 1.0e-10)};
        }

        // ---- 6: rotation consistency ------------------------------------------

        std::vector<CheckResult> check_rotation(const ValidationOptions &o)
        {
            constexpr int L = 60;
            const double kappa = o.kappa.value_or(25.0), beta = o.beta.value_or(10.0);
            const WignerPi2Table table(L);
            const CoeffTable standard = standard_fb_coeffs(kappa, beta, L, table);
            std::mt19937_64 rng(20260101);

            double synth = 0.0, power = 0.0;
            for (int f = 0; f < 10; ++f)
            {
                const RotationMatrix R = random_rotation(rng);
                FB5Params p = FB5Params::standard(kappa, beta);
                p.eta1 = R.column(1);
                p.eta2 = R.column(2);
                p.mu = R.column(3);
                if (f % 2 == 1)
                    p.eta2 = {-p.eta2[0], -p.eta2[1], -p.eta2[2]}; // left-handed input frame
                const CoeffTable c = fb5_coeffs(p, L, table);
                for (int k = 0; k < 500; ++k)
                {
                    const Direction d = random_direction(rng);
                    synth = std::max(synth, std::abs(synthesize(c, d) - fb5_pdf_direct(d, p)));
                }
                for (int ell = 0; ell <= L; ++ell)
                {
                    const double ref = standard.degree_power(ell);
                    if (ref > 0.0)
                        power = std::max(power, std::fabs(c.degree_power(ell) - ref) / ref);
                }
            }
            return {row("rotation synthesis vs direct density", synth, o.tol.value_or(1.0e-8), "10 frames x 500 directions, L=60"),
                    row("rotation degree-wise power (relative)", power, 1.0e-12)};
        }

        // ---- 7: conjugate symmetry and Euler round trip ------------------------

        std::vector<CheckResult> check_symmetry(const ValidationOptions &o)
        {
            constexpr int L = 40;
            const WignerPi2Table table(L);
            std::mt19937_64 rng(77);
            double conj_err = 0.0;
            for (const auto &[kappa, beta] : params_or(o, {{0.0, 0.0}, {10.0, 5.0}, {25.0, 10.0}, {100.0, 49.0}}))
            {
                conj_err = std::max(conj_err, standard_fb_coeffs(kappa, beta, L, table).conjugate_symmetry_error());
                MixtureModel mix;
                for (int w = 0; w < 3; ++w)
                {
                    const RotationMatrix R = random_rotation(rng);
                    FB5Params p = FB5Params::standard(kappa, beta);
                    p.eta1 = R.column(1);
                    p.eta2 = R.column(2);
                    p.mu = R.column(3);
                    const CoeffTable c = fb5_coeffs(p, L, table);
                    conj_err = std::max(conj_err, c.conjugate_symmetry_error());
                    mix.components.push_back({w == 2 ? 0.5 : 0.25, p});
                }
                conj_err = std::max(conj_err, mixture_coeffs(mix, L, table).conjugate_symmetry_error());
            }
            const FB5Density f(FB5Params::standard(25.0, 10.0));
            conj_err = std::max(conj_err, numeric_sht(RealSphereFunction([&f](const Direction &d) { return f(d); }), L, quadrature_nodes(120))
                                              .conjugate_symmetry_error());

            std::uniform_real_distribution<double> u01(0.0, 1.0);
            double euler = 0.0;
            for (int k = 0; k < 1000; ++k)
            {
                const EulerAngles a(2.0 * M_PI * u01(rng), 0.01 + (M_PI - 0.02) * u01(rng), 2.0 * M_PI * u01(rng));
                const EulerAngles b = euler_from_rotation(rotation_matrix(a));
                euler = std::max({euler, angle_gap(a.varphi, b.varphi), std::fabs(a.vartheta - b.vartheta), angle_gap(a.omega, b.omega)});

                const RotationMatrix R = random_rotation(rng);
                const RotationMatrix back = rotation_matrix(euler_from_rotation(R));
                for (int i = 1; i <= 3; ++i)
                    for (int j = 1; j <= 3; ++j)
                        euler = std::max(euler, std::fabs(back(i, j) - R(i, j)));
            }
            return {row("symmetry conjugate symmetry of coefficient tables", conj_err, o.tol.value_or(1.0e-12)),
                    row("symmetry Euler round trip (1000 rotations)", euler, 1.0e-10)};
        }
    }

    const std::vector<std::string> &check_names()
    {
        static const std::vector<std::string> names{"coeff-oracle", "spatial-error", "truncation", "sfc-oracle", "structural", "rotation", "symmetry"};
        return names;
    }

    std::vector<CheckResult> run_check(const std::string &name, const ValidationOptions &options)
    {
        if (name == "coeff-oracle")
            return check_coeff_oracle(options);
        if (name == "spatial-error")
            return check_spatial_error(options);
        if (name == "truncation")
            return check_truncation(options);
        if (name == "sfc-oracle")
            return check_sfc_oracle(options);
        if (name == "structural")
            return check_structural(options);
        if (name == "rotation")
            return check_rotation(options);
        if (name == "symmetry")
            return check_symmetry(options);
        throw std::invalid_argument("unknown check '" + name + "'");
    }

    std::vector<CheckResult> run_all_checks(const ValidationOptions &options)
    {
        std::vector<CheckResult> all;
        for (const auto &n : check_names())
        {
            auto r = run_check(n, options);
            all.insert(all.end(), r.begin(), r.end());
        }
        return all;
    }

    std::string report_json(const std::vector<CheckResult> &results)
    {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &r : results)
            arr.push_back({{"test", r.test}, {"max_abs_error", r.max_abs_error}, {"tolerance", r.tolerance}, {"pass", r.pass}});
        return arr.dump(2);
    }
}
