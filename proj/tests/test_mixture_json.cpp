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

#include "fbharm/errors.hpp"
#include "fbharm/fb5.hpp"

#include <cmath>
#include <sstream>

using namespace fbharm;

TEST_CASE("two-component mixture document")
{
    const char *text = R"({
        "components": [
            {"weight": 0.25, "kappa": 25, "beta": 10, "mu": [0, 0, 1], "eta1": [1, 0, 0], "eta2": [0, 1, 0]},
            {"weight": 0.75, "kappa": 100, "beta": 49, "mu": [0, 1, 0], "eta1": [1, 0, 0], "eta2": [0, 0, 1]}
        ]})";
    std::istringstream in(text);
    const MixtureModel m = read_mixture_json(in);
    REQUIRE(m.components.size() == 2);
    CHECK(m.components[0].weight == 0.25);
    CHECK(m.components[1].params.kappa == 100.0);
    CHECK(m.components[1].params.beta == 49.0);
    CHECK(m.components[1].params.mu[1] == 1.0);
    CHECK(m.components[1].params.eta2[2] == 1.0);
}

TEST_CASE("weight defaults to one")
{
    const MixtureModel m = parse_mixture_json(R"({"components":[{"kappa":3,"beta":1,"mu":[1,0,0],"eta1":[0,1,0],"eta2":[0,0,1]}]})");
    CHECK(m.components.at(0).weight == 1.0);
}

TEST_CASE("nearly orthonormal frames are repaired")
{
    const MixtureModel m = parse_mixture_json(
        R"({"components":[{"kappa":3,"beta":1,"mu":[0,0,1.0000004],"eta1":[1,3e-7,0],"eta2":[-2e-7,1,0]}]})");
    const FB5Params &p = m.components[0].params;
    CHECK(std::fabs(norm(p.mu) - 1.0) <= 1e-15);
    CHECK(std::fabs(norm(p.eta1) - 1.0) <= 1e-15);
    CHECK(std::fabs(norm(p.eta2) - 1.0) <= 1e-15);
    CHECK(std::fabs(dot(p.mu, p.eta1)) <= 1e-15);
    CHECK(std::fabs(dot(p.eta1, p.eta2)) <= 1e-15);
    CHECK(std::fabs(dot(p.mu, p.eta2)) <= 1e-15);
}

TEST_CASE("malformed documents raise ParseError")
{
    for (const char *text : {"", "{", "[]", R"({"components": 3})", R"({"components":[1]})",
                             R"({"components":[{"beta":1,"mu":[0,0,1],"eta1":[1,0,0],"eta2":[0,1,0]}]})",
                             R"({"components":[{"kappa":"3","beta":1,"mu":[0,0,1],"eta1":[1,0,0],"eta2":[0,1,0]}]})",
                             R"({"components":[{"kappa":3,"beta":1,"mu":[0,1],"eta1":[1,0,0],"eta2":[0,1,0]}]})",
                             R"({"components":[{"kappa":3,"beta":1,"mu":[0,0,"a"],"eta1":[1,0,0],"eta2":[0,1,0]}]})"})
    {
        INFO(text);
        CHECK_THROWS_AS(parse_mixture_json(text), ParseError);
    }
}

TEST_CASE("invalid parameters raise ConstraintError")
{
    for (const char *text : {R"({"components":[]})",
                             R"({"components":[{"kappa":3,"beta":2,"mu":[0,0,1],"eta1":[1,0,0],"eta2":[0,1,0]}]})",
                             R"({"components":[{"kappa":3,"beta":1,"mu":[0,0,1.1],"eta1":[1,0,0],"eta2":[0,1,0]}]})",
                             R"({"components":[{"kappa":3,"beta":1,"mu":[0,0,1],"eta1":[0.6,0.8,0],"eta2":[0,1,0]}]})",
                             R"({"components":[{"weight":0.5,"kappa":3,"beta":1,"mu":[0,0,1],"eta1":[1,0,0],"eta2":[0,1,0]}]})",
                             R"({"components":[{"weight":-1,"kappa":3,"beta":1,"mu":[0,0,1],"eta1":[1,0,0],"eta2":[0,1,0]},
                                               {"weight":2,"kappa":3,"beta":1,"mu":[0,0,1],"eta1":[1,0,0],"eta2":[0,1,0]}]})"})
    {
        INFO(text);
        CHECK_THROWS_AS(parse_mixture_json(text), ConstraintError);
    }
}
