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

#ifndef FBHARM_ERRORS_HPP
#define FBHARM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fbharm
{
    // A documented parameter constraint is violated (beta > kappa/2, non-orthonormal frame,
    // weights not summing to one, element index out of range, ...).
    class ConstraintError : public std::invalid_argument
    {
    public:
        explicit ConstraintError(const std::string &what) : std::invalid_argument(what) {}
    };

    // Malformed input document (JSON, CSV).
    class ParseError : public std::runtime_error
    {
    public:
        explicit ParseError(const std::string &what) : std::runtime_error(what) {}
    };
}

#endif
