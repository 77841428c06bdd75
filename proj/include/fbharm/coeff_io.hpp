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

#ifndef FBHARM_COEFF_IO_HPP
#define FBHARM_COEFF_IO_HPP

#include "fbharm/sht.hpp"

#include <iosfwd>
#include <string>

namespace fbharm
{
    // CSV with header `ell,m,re,im`, ell ascending then m from -ell to ell, 17 significant digits.
    void write_coeffs_csv(std::ostream &os, const CoeffTable &coeffs);

    // Inverse of write_coeffs_csv. Rows may come in any order; missing entries are zero.
    // Throws ParseError on malformed input.
    CoeffTable read_coeffs_csv(std::istream &is);

    // "%.17g" formatting used by every CSV writer.
    std::string format_double(double v);
}

#endif
