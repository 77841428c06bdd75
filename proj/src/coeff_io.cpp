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

#include "fbharm/coeff_io.hpp"
#include "fbharm/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>
#include <vector>

namespace fbharm
{
    std::string format_double(double v)
    {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }

    void write_coeffs_csv(std::ostream &os, const CoeffTable &coeffs)
    {
        os << "ell,m,re,im\n";
        for (int ell = 0; ell <= coeffs.band_limit(); ++ell)
            for (int m = -ell; m <= ell; ++m)
            {
                const cdouble c = coeffs(ell, m);
                os << ell << ',' << m << ',' << format_double(c.real()) << ',' << format_double(c.imag()) << '\n';
            }
    }

    CoeffTable read_coeffs_csv(std::istream &is)
    {
        std::string line;
        if (!std::getline(is, line))
            throw ParseError("coefficient CSV: empty input");
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line != "ell,m,re,im")
            throw ParseError("coefficient CSV: expected header 'ell,m,re,im'");

        std::vector<std::tuple<int, int, cdouble>> rows;
        int L = 0, lineno = 1;
        while (std::getline(is, line))
        {
            ++lineno;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            std::replace(line.begin(), line.end(), ',', ' ');
            std::istringstream ss(line);
            int ell, m;
            double re, im;
            std::string rest;
            if (!(ss >> ell >> m >> re >> im) || (ss >> rest))
                throw ParseError("coefficient CSV: malformed row at line " + std::to_string(lineno));
            if (ell < 0 || m < -ell || m > ell)
                throw ParseError("coefficient CSV: invalid (ell, m) at line " + std::to_string(lineno));
            L = std::max(L, ell);
            rows.emplace_back(ell, m, cdouble(re, im));
        }

        CoeffTable out(L);
        for (const auto &[ell, m, c] : rows)
            out(ell, m) = c;
        return out;
    }
}
