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

#include "fbharm/errors.hpp"
#include "fbharm/fb5.hpp"

#include <json.hpp>

#include <cmath>
#include <istream>
#include <iterator>

namespace fbharm
{
    namespace
    {
        using nlohmann::json;

        constexpr double repair_tol = 1.0e-6;

        Vec3 read_vec(const json &j, const char *key)
        {
            if (!j.contains(key))
                throw ParseError(std::string("mixture JSON: missing '") + key + "'");
            const json &v = j.at(key);
            if (!v.is_array() || v.size() != 3)
                throw ParseError(std::string("mixture JSON: '") + key + "' must be an array of 3 numbers");
            Vec3 out{};
            for (std::size_t i = 0; i < 3; ++i)
            {
                if (!v[i].is_number())
                    throw ParseError(std::string("mixture JSON: '") + key + "' must be an array of 3 numbers");
                out[i] = v[i].get<double>();
            }
            return out;
        }

        double read_num(const json &j, const char *key)
        {
            if (!j.contains(key))
                throw ParseError(std::string("mixture JSON: missing '") + key + "'");
            if (!j.at(key).is_number())
                throw ParseError(std::string("mixture JSON: '") + key + "' must be a number");
            return j.at(key).get<double>();
        }

        Vec3 axpy(double a, const Vec3 &x, const Vec3 &y) { return {a * x[0] + y[0], a * x[1] + y[1], a * x[2] + y[2]}; }

        Vec3 normalized(const Vec3 &v)
        {
            const double n = norm(v);
            return {v[0] / n, v[1] / n, v[2] / n};
        }

        // Gram-Schmidt in the order mu, eta1, eta2 once the frame is known to be nearly orthonormal.
        void repair_frame(FB5Params &p)
        {
            for (const Vec3 *v : {&p.mu, &p.eta1, &p.eta2})
                if (!(std::fabs(norm(*v) - 1.0) <= repair_tol))
                    throw ConstraintError("mixture JSON: frame vector norm deviates from 1 by more than 1e-6");
            if (!(std::fabs(dot(p.mu, p.eta1)) <= repair_tol && std::fabs(dot(p.mu, p.eta2)) <= repair_tol &&
                  std::fabs(dot(p.eta1, p.eta2)) <= repair_tol))
                throw ConstraintError("mixture JSON: frame vectors are not orthogonal within 1e-6");

            p.mu = normalized(p.mu);
            p.eta1 = normalized(axpy(-dot(p.eta1, p.mu), p.mu, p.eta1));
            Vec3 e2 = axpy(-dot(p.eta2, p.mu), p.mu, p.eta2);
            e2 = axpy(-dot(e2, p.eta1), p.eta1, e2);
            p.eta2 = normalized(e2);
        }
    }

    MixtureModel parse_mixture_json(const std::string &text)
    {
        json doc;
        try
        {
            doc = json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            throw ParseError(std::string("mixture JSON: ") + e.what());
        }
        if (!doc.is_object() || !doc.contains("components") || !doc["components"].is_array())
            throw ParseError("mixture JSON: expected an object with a 'components' array");

        MixtureModel model;
        for (const auto &c : doc["components"])
        {
            if (!c.is_object())
                throw ParseError("mixture JSON: each component must be an object");
            MixtureComponent comp;
            comp.weight = c.contains("weight") ? read_num(c, "weight") : 1.0;
            comp.params.kappa = read_num(c, "kappa");
            comp.params.beta = read_num(c, "beta");
            comp.params.mu = read_vec(c, "mu");
            comp.params.eta1 = read_vec(c, "eta1");
            comp.params.eta2 = read_vec(c, "eta2");
            repair_frame(comp.params);
            model.components.push_back(comp);
        }
        model.validate();
        return model;
    }

    MixtureModel read_mixture_json(std::istream &is)
    {
        const std::string text{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
        return parse_mixture_json(text);
    }
}
