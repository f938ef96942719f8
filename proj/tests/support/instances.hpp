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

#ifndef MDMP_TESTS_INSTANCES_HPP
#define MDMP_TESTS_INSTANCES_HPP

#include <vector>

#include "mdmp/generator.hpp"

namespace testing_support {

// Seeded instances shared by the property tests; generated once per binary.
inline const std::vector<mdmp::Instance>& instances()
{
    static const std::vector<mdmp::Instance> set = mdmp::generate_instance_set(7741, 60, mdmp::Tolerances{});
    return set;
}

} // namespace testing_support

#endif
