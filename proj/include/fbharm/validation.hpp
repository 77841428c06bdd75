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

#ifndef FBHARM_VALIDATION_HPP
#define FBHARM_VALIDATION_HPP

#include <optional>
#include <string>
#include <vector>

namespace fbharm
{
    struct CheckResult
    {
        std::string test;
        double max_abs_error = 0.0;
        double tolerance = 0.0;
        bool pass = false;
        std::string detail;
    };

    struct ValidationOptions
    {
        // Restrict parameter-dependent checks to one (kappa, beta) pair.
        std::optional<double> kappa;
        std::optional<double> beta;
        // Override the primary tolerance of the selected check(s).
        std::optional<double> tol;
    };

    // Names accepted by run_check, in acceptance order.
    const std::vector<std::string> &check_names();

    // Runs one named check; a check may report several rows. Throws std::invalid_argument for unknown names.
    std::vector<CheckResult> run_check(const std::string &name, const ValidationOptions &options = {});

    std::vector<CheckResult> run_all_checks(const ValidationOptions &options = {});

    // [{"test":..,"max_abs_error":..,"tolerance":..,"pass":..}, ...]
    std::string report_json(const std::vector<CheckResult> &results);
}

#endif
