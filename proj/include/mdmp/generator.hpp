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

#ifndef MDMP_GENERATOR_HPP
#define MDMP_GENERATOR_HPP

// Seeded random matrices with prescribed order and index for which the
// Minkowski inverse exists. A = U [C X; 0 N] U* with U Haar-like unitary,
// C upper triangular with eigenvalue moduli in [0.5, 2], N nilpotent with
// largest Jordan block equal to the index and X a random coupling. Draws that
// fail existence or are badly conditioned are rejected and redrawn.

#include <cstdint>
#include <random>
#include <vector>

#include "mdmp/core.hpp"

namespace mdmp {

enum class Structure { Mixed, Nilpotent, Nonsingular };

struct GeneratorConfig {
    Index min_order = 3;
    Index max_order = 8;
    Index max_index = 3;
    double max_condition = 1e6;  // bound on cond of B~B, CC~, G1, Delta and the chain core
    int max_attempts = 500;
};

struct Instance {
    Matrix A;
    Index order = 0;
    Index index = 0;
    std::uint64_t seed = 0;
    int attempts = 0;
};

Matrix random_unitary(std::mt19937_64& rng, Index n);

// Throws InvalidArgument for impossible (n, index) pairs or when every
// attempt is rejected.
Instance generate_instance(std::uint64_t seed, Index n, Index index, const Tolerances& tol,
                           Structure structure = Structure::Mixed, const GeneratorConfig& config = {});

// count instances with n drawn from [min_order, max_order] and index from
// [1, min(max_index, n - 1)], each reproducible from (seed, position).
std::vector<Instance> generate_instance_set(std::uint64_t seed, std::size_t count, const Tolerances& tol,
                                            const GeneratorConfig& config = {});

} // namespace mdmp

#endif
