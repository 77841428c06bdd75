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

#ifndef FBHARM_TOOLS_COMMANDS_HPP
#define FBHARM_TOOLS_COMMANDS_HPP

#include <iosfwd>

namespace fbharm::cli
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_validation_failed = 1,
        exit_parse_error = 2,
        exit_constraint = 3
    };

    // Entry point of the `fbharm` tool. Output files go to --out, otherwise to `out`.
    int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
}

#endif
