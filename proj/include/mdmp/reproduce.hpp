// Copyright 2026 The mdmp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MDMP_REPRODUCE_HPP
#define MDMP_REPRODUCE_HPP

// Regression assertions over the worked examples. Comparisons against printed
// (five-decimal) values use `fixture_tol` as an absolute entrywise bound; the
// closed-form resolvent checks are fixed at 1e-12 and the limit schedules at
// 1e-5.

#include <string>
#include <vector>

#include "mdmp/core.hpp"
#include "mdmp/representations.hpp"

namespace mdmp {

struct ReproduceConfig {
    double fixture_tol = 1e-4;
    Tolerances tol;
    LimitSchedule schedule;
};

struct FixtureCheck {
    std::string name;  // group.check
    std::string description;
};

struct FixtureOutcome {
    std::string name;
    std::string description;
    bool passed = false;
    double value = 0.0;      // measured quantity (usually max |difference|)
    double bound = 0.0;
    std::string relation;    // how value is compared with bound
    std::string detail;      // error message when the check threw
};

std::vector<FixtureCheck> fixture_checks();

// Runs every check whose name starts with `prefix` (all when empty).
std::vector<FixtureOutcome> run_fixture_checks(const ReproduceConfig& config, const std::string& prefix = "");

} // namespace mdmp

#endif
