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

#include "commands.hpp"

#include "fbharm/coeff_io.hpp"
#include "fbharm/errors.hpp"
#include "fbharm/fb5.hpp"
#include "fbharm/sfc.hpp"
#include "fbharm/validation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace fbharm::cli
{
    namespace
    {
        struct Config
        {
            std::string model_path;
            std::optional<double> kappa;
            std::optional<double> beta;
            int L = 40;
            int ntheta = 181;
            int nphi = 360;
            std::string geometry = "uca";
            int elements = 16;
            std::string pair;
            double radius = 1.0;
            double rmin = 0.0;
            double rmax = 2.0;
            int steps = 50;
            double lambda = 1.0;
            std::string out;
            std::string check;
            std::optional<double> tol;
        };

        MixtureModel load_model(const Config &c)
        {
            if (!c.model_path.empty())
            {
                if (c.kappa || c.beta)
                    throw ConstraintError("--model cannot be combined with --kappa/--beta");
                std::ifstream in(c.model_path);
                if (!in)
                    throw ParseError("cannot read model file '" + c.model_path + "'");
                return read_mixture_json(in);
            }
            MixtureModel m = MixtureModel::single(FB5Params::standard(c.kappa.value_or(0.0), c.beta.value_or(0.0)));
            m.validate();
            return m;
        }

        void emit(const Config &c, const std::string &text, std::ostream &out)
        {
            if (c.out.empty())
            {
                out << text;
                return;
            }
            std::ofstream f(c.out, std::ios::binary);
            if (!f)
                throw ConstraintError("cannot write output file '" + c.out + "'");
            f << text;
            if (!f)
                throw ConstraintError("failed writing output file '" + c.out + "'");
        }

        // Unit-radius template read from a `p,x,y,z` CSV.
        ArrayGeometry read_geometry_csv(const std::string &path)
        {
            std::ifstream in(path);
            if (!in)
                throw ParseError("cannot read geometry file '" + path + "'");
            std::string line;
            if (!std::getline(in, line) || line.rfind("p,x,y,z", 0) != 0)
                throw ParseError("geometry file: expected header 'p,x,y,z'");
            ArrayGeometry g;
            g.label = path;
            while (std::getline(in, line))
            {
                if (!line.empty() && line.back() == '\r')
                    line.pop_back();
                if (line.empty())
                    continue;
                std::replace(line.begin(), line.end(), ',', ' ');
                std::istringstream ss(line);
                int p;
                Vec3 z;
                std::string rest;
                if (!(ss >> p >> z[0] >> z[1] >> z[2]) || (ss >> rest))
                    throw ParseError("geometry file: malformed row '" + line + "'");
                if (p != g.size() + 1)
                    throw ParseError("geometry file: element indices must run 1, 2, ...");
                for (double v : z)
                    if (!std::isfinite(v))
                        throw ConstraintError("geometry file: non-finite coordinate");
                g.positions.push_back(z);
            }
            if (g.positions.empty())
                throw ParseError("geometry file: no elements");
            return g;
        }

        GeometryBuilder make_builder(const Config &c)
        {
            if (c.geometry == "uca")
                return uca_builder(c.elements);
            if (c.geometry == "rda")
                return rda_builder();
            return scaled_builder(read_geometry_csv(c.geometry));
        }

        std::pair<int, int> resolve_pair(const Config &c)
        {
            if (c.pair.empty())
            {
                if (c.geometry == "rda")
                    return {1, nearest_neighbor(rda_positions(1.0), 1)};
                return {2, 3};
            }
            std::string s = c.pair;
            if (std::count(s.begin(), s.end(), ',') != 1)
                throw ParseError("--pair expects 'p,q'");
            std::replace(s.begin(), s.end(), ',', ' ');
            std::istringstream ss(s);
            int p, q;
            std::string rest;
            if (!(ss >> p >> q) || (ss >> rest))
                throw ParseError("--pair expects 'p,q'");
            return {p, q};
        }

        int cmd_coeffs(const Config &c, std::ostream &out)
        {
            const MixtureModel model = load_model(c);
            if (c.L < 0 || c.L > 500)
                throw ConstraintError("--L must lie in [0, 500]");
            std::ostringstream ss;
            write_coeffs_csv(ss, mixture_coeffs(model, c.L, WignerPi2Table(c.L)));
            emit(c, ss.str(), out);
            return exit_ok;
        }

        int cmd_pdf(const Config &c, std::ostream &out)
        {
            const MixtureModel model = load_model(c);
            if (c.ntheta < 2 || c.nphi < 2)
                throw ConstraintError("grid sizes must be at least 2");
            const MixtureDensity h(model);
            std::ostringstream ss;
            ss << "theta,phi,value\n";
            for (int i = 0; i < c.ntheta; ++i)
            {
                const double th = M_PI * i / (c.ntheta - 1);
                for (int k = 0; k < c.nphi; ++k)
                {
                    const double ph = 2.0 * M_PI * k / c.nphi;
                    ss << format_double(th) << ',' << format_double(ph) << ',' << format_double(h(Direction(th, ph))) << '\n';
                }
            }
            emit(c, ss.str(), out);
            return exit_ok;
        }

        int cmd_sfc(const Config &c, std::ostream &out)
        {
            const MixtureModel model = load_model(c);
            if (c.steps < 1)
                throw ConstraintError("--steps must be at least 1");
            if (!(c.rmin >= 0.0) || !(c.rmax >= c.rmin))
                throw ConstraintError("require 0 <= rmin <= rmax");
            const auto [p, q] = resolve_pair(c);
            const GeometryBuilder build = make_builder(c);
            build(1.0).element(p);
            build(1.0).element(q);

            std::vector<double> grid(c.steps);
            for (int i = 0; i < c.steps; ++i)
                grid[i] = c.steps == 1 ? c.rmin : c.rmin + (c.rmax - c.rmin) * i / (c.steps - 1);
            const SfcCurve curve = sfc_curve(model, build, p, q, c.lambda, grid, c.tol.value_or(1.0e-14));

            std::ostringstream ss;
            ss << "r_over_lambda,re_rho,im_rho,abs_rho\n";
            for (std::size_t i = 0; i < grid.size(); ++i)
                ss << format_double(curve.r_over_lambda[i]) << ',' << format_double(curve.rho[i].real()) << ','
                   << format_double(curve.rho[i].imag()) << ',' << format_double(std::abs(curve.rho[i])) << '\n';
            emit(c, ss.str(), out);
            return exit_ok;
        }

        int cmd_geometry(const Config &c, std::ostream &out)
        {
            if (!(c.radius >= 0.0))
                throw ConstraintError("--radius must be non-negative");
            const ArrayGeometry g = make_builder(c)(c.radius);
            std::ostringstream ss;
            ss << "p,x,y,z\n";
            for (int p = 1; p <= g.size(); ++p)
            {
                const Vec3 &z = g.element(p);
                ss << p << ',' << format_double(z[0]) << ',' << format_double(z[1]) << ',' << format_double(z[2]) << '\n';
            }
            emit(c, ss.str(), out);
            return exit_ok;
        }

        int cmd_validate(const Config &c, std::ostream &out, std::ostream &err)
        {
            ValidationOptions opt;
            opt.kappa = c.kappa;
            opt.beta = c.beta;
            opt.tol = c.tol;
            if (opt.kappa || opt.beta)
                FB5Params::standard(opt.kappa.value_or(0.0), opt.beta.value_or(0.0)).validate();

            std::vector<CheckResult> results;
            if (c.check.empty())
                results = run_all_checks(opt);
            else
            {
                const auto &names = check_names();
                if (std::find(names.begin(), names.end(), c.check) == names.end())
                    throw ConstraintError("unknown check '" + c.check + "'");
                results = run_check(c.check, opt);
            }

            bool ok = true;
            for (const auto &r : results)
            {
                ok = ok && r.pass;
                err << (r.pass ? "PASS " : "FAIL ") << r.test << ": " << r.max_abs_error << " (tol " << r.tolerance << ")";
                if (!r.detail.empty())
                    err << "  [" << r.detail << "]";
                err << '\n';
            }
            emit(c, report_json(results) + "\n", out);
            return ok ? exit_ok : exit_validation_failed;
        }

        void add_model_options(CLI::App *sub, Config &c)
        {
            sub->add_option("--model", c.model_path, "Mixture JSON document");
            sub->add_option("--kappa", c.kappa, "Concentration of a standard-frame FB5 model");
            sub->add_option("--beta", c.beta, "Ovalness of a standard-frame FB5 model");
        }
    }

    int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    {
        Config c;
        CLI::App app{"Spherical-harmonic expansion of FB5 distributions and spatial fading correlation"};
        app.name("fbharm");
        app.require_subcommand(1);

        auto *coeffs = app.add_subcommand("coeffs", "Write the coefficient table of a model as CSV");
        add_model_options(coeffs, c);
        coeffs->add_option("--L", c.L, "Band-limit")->capture_default_str();
        coeffs->add_option("--out", c.out, "Output file (default stdout)");

        auto *pdf = app.add_subcommand("pdf", "Write the density on an equiangular grid as CSV");
        add_model_options(pdf, c);
        pdf->add_option("--ntheta", c.ntheta, "Co-latitude samples including both poles")->capture_default_str();
        pdf->add_option("--nphi", c.nphi, "Longitude samples")->capture_default_str();
        pdf->add_option("--out", c.out, "Output file (default stdout)");

        auto *sfc = app.add_subcommand("sfc", "Write the spatial fading correlation over a radius grid as CSV");
        add_model_options(sfc, c);
        sfc->add_option("--geometry", c.geometry, "uca, rda or a p,x,y,z CSV file of unit-radius positions")->capture_default_str();
        sfc->add_option("--elements", c.elements, "Number of UCA elements")->capture_default_str();
        sfc->add_option("--pair", c.pair, "Element pair p,q (1-based; default 2,3 or 1 and its nearest neighbour for rda)");
        sfc->add_option("--rmin", c.rmin, "First R/lambda")->capture_default_str();
        sfc->add_option("--rmax", c.rmax, "Last R/lambda")->capture_default_str();
        sfc->add_option("--steps", c.steps, "Number of grid points")->capture_default_str();
        sfc->add_option("--lambda", c.lambda, "Wavelength in metres")->capture_default_str();
        sfc->add_option("--tol", c.tol, "Tail tolerance of the degree sum");
        sfc->add_option("--out", c.out, "Output file (default stdout)");

        auto *geometry = app.add_subcommand("geometry", "List element positions as CSV");
        geometry->add_option("--geometry", c.geometry, "uca, rda or a p,x,y,z CSV file")->capture_default_str();
        geometry->add_option("--elements", c.elements, "Number of UCA elements")->capture_default_str();
        geometry->add_option("--radius", c.radius, "Array radius in metres")->capture_default_str();
        geometry->add_option("--out", c.out, "Output file (default stdout)");

        auto *validate = app.add_subcommand("validate", "Run the validation suite and write a JSON report");
        validate->add_option("--check", c.check, "Single check name");
        validate->add_option("--kappa", c.kappa, "Restrict parameter-dependent checks to this kappa");
        validate->add_option("--beta", c.beta, "Restrict parameter-dependent checks to this beta");
        validate->add_option("--tol", c.tol, "Override the primary tolerance");
        validate->add_option("--out", c.out, "Output file (default stdout)");

        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError &e)
        {
            const int code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_parse_error;
        }

        try
        {
            if (coeffs->parsed())
                return cmd_coeffs(c, out);
            if (pdf->parsed())
                return cmd_pdf(c, out);
            if (sfc->parsed())
                return cmd_sfc(c, out);
            if (geometry->parsed())
                return cmd_geometry(c, out);
            return cmd_validate(c, out, err);
        }
        catch (const ParseError &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_parse_error;
        }
        catch (const std::invalid_argument &e) // includes ConstraintError
        {
            err << "error: " << e.what() << '\n';
            return exit_constraint;
        }
        catch (const std::domain_error &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_constraint;
        }
        catch (const std::out_of_range &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_constraint;
        }
    }
}
