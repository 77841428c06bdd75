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

#include "doctest.h"

#include "commands.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using fbharm::cli::run;

namespace
{
    struct Outcome
    {
        int code;
        std::string out;
        std::string err;
    };

    Outcome call(std::vector<std::string> args)
    {
        args.insert(args.begin(), "fbharm");
        std::vector<const char *> argv;
        for (const auto &a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
        return {code, out.str(), err.str()};
    }

    int spawn(const std::string &args)
    {
        const std::string cmd = std::string(FBHARM_TOOL) + " " + args + " >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        REQUIRE(WIFEXITED(status));
        return WEXITSTATUS(status);
    }

    std::vector<std::string> lines(const std::string &text)
    {
        std::vector<std::string> out;
        std::istringstream ss(text);
        for (std::string l; std::getline(ss, l);)
            out.push_back(l);
        return out;
    }

    fs::path scratch(const std::string &name)
    {
        const fs::path dir = fs::temp_directory_path() / "fbharm_cli_test";
        fs::create_directories(dir);
        return dir / name;
    }

    void write_file(const fs::path &p, const std::string &text)
    {
        std::ofstream(p) << text;
    }
}

TEST_CASE("coeffs writes the table")
{
    const Outcome r = call({"coeffs", "--kappa", "25", "--beta", "10", "--L", "6"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 1 + 49);
    CHECK(rows[0] == "ell,m,re,im");
    CHECK(rows[1].rfind("0,0,0.28209479177", 0) == 0);

    // deterministic output
    CHECK(call({"coeffs", "--kappa", "25", "--beta", "10", "--L", "6"}).out == r.out);
}

TEST_CASE("coeffs from a mixture document and to a file")
{
    const fs::path model = scratch("model.json");
    write_file(model, R"({"components":[{"weight":0.5,"kappa":10,"beta":2,"mu":[0,0,1],"eta1":[1,0,0],"eta2":[0,1,0]},
                                        {"weight":0.5,"kappa":10,"beta":2,"mu":[1,0,0],"eta1":[0,1,0],"eta2":[0,0,1]}]})");
    const fs::path out = scratch("coeffs.csv");
    const Outcome r = call({"coeffs", "--model", model.string(), "--L", "4", "--out", out.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(lines(ss.str()).size() == 1 + 25);

    CHECK(call({"coeffs", "--model", model.string(), "--kappa", "3"}).code == 3);
    write_file(model, "{ not json");
    CHECK(call({"coeffs", "--model", model.string()}).code == 2);
    CHECK(call({"coeffs", "--model", scratch("missing.json").string()}).code == 2);
}

TEST_CASE("pdf grid")
{
    const Outcome r = call({"pdf", "--kappa", "4", "--beta", "1", "--ntheta", "5", "--nphi", "4"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 1 + 20);
    CHECK(rows[0] == "theta,phi,value");
    CHECK(rows[1].rfind("0,0,", 0) == 0);
    CHECK(call({"pdf", "--kappa", "4", "--beta", "1", "--ntheta", "1"}).code == 3);
}

TEST_CASE("sfc curve")
{
    const Outcome r = call({"sfc", "--kappa", "25", "--beta", "10", "--rmin", "0", "--rmax", "1", "--steps", "5"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "r_over_lambda,re_rho,im_rho,abs_rho");
    CHECK(rows[1] == "0,1,0,1");

    CHECK(call({"sfc", "--kappa", "25", "--beta", "10", "--geometry", "rda", "--steps", "3"}).code == 0);
    CHECK(call({"sfc", "--kappa", "25", "--beta", "10", "--pair", "1,17"}).code == 3);
    CHECK(call({"sfc", "--kappa", "25", "--beta", "10", "--pair", "1-2"}).code == 2);
    CHECK(call({"sfc", "--kappa", "25", "--beta", "10", "--rmin", "2", "--rmax", "1"}).code == 3);
    CHECK(call({"sfc", "--kappa", "25", "--beta", "10", "--lambda", "0"}).code == 3);

    const fs::path geo = scratch("pair.csv");
    write_file(geo, "p,x,y,z\n1,0,0,0.5\n2,0,0,-0.5\n");
    const Outcome g = call({"sfc", "--kappa", "0", "--beta", "0", "--geometry", geo.string(), "--pair", "1,2", "--rmax", "1", "--steps", "2"});
    CHECK(g.code == 0);
    // uniform AoA, unit separation at R = lambda: rho = sin(2 pi) / (2 pi)
    const auto grows = lines(g.out);
    REQUIRE(grows.size() == 3);
    CHECK(std::fabs(std::stod(grows[2].substr(2))) <= 1e-12);

    write_file(geo, "p,x,y,z\n1,0,0\n");
    CHECK(call({"sfc", "--kappa", "0", "--beta", "0", "--geometry", geo.string(), "--pair", "1,1"}).code == 2);
}

TEST_CASE("geometry listing")
{
    const Outcome r = call({"geometry", "--geometry", "rda", "--radius", "2"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 21);
    const Outcome u = call({"geometry", "--elements", "4", "--radius", "1"});
    const auto rows = lines(u.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[4] == "4,1,-2.4492935982947064e-16,0");
    CHECK(call({"geometry", "--radius", "-1"}).code == 3);
}

TEST_CASE("validate writes a JSON report")
{
    const Outcome r = call({"validate", "--check", "structural"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() >= 4);
    for (const auto &row : doc)
    {
        CHECK(row.contains("test"));
        CHECK(row.contains("max_abs_error"));
        CHECK(row.contains("tolerance"));
        CHECK(row.at("pass").get<bool>());
    }
    CHECK(r.err.find("PASS structural") != std::string::npos);

    CHECK(call({"validate", "--check", "structural", "--tol", "0"}).code == 1);
    CHECK(call({"validate", "--check", "unknown"}).code == 3);
    CHECK(call({"validate", "--check", "structural", "--kappa", "4", "--beta", "3"}).code == 3);
}

TEST_CASE("exit codes of the installed tool")
{
    CHECK(spawn("--help") == 0);
    CHECK(spawn("") == 2);
    CHECK(spawn("coeffs --bogus") == 2);
    CHECK(spawn("coeffs --kappa x") == 2);
    CHECK(spawn("coeffs --kappa 3 --beta 2") == 3);
    CHECK(spawn("coeffs --kappa 300 --beta 2") == 3);
    CHECK(spawn("coeffs --kappa 3 --beta 1 --L 3") == 0);
    CHECK(spawn("validate --check structural --tol 0") == 1);
}
