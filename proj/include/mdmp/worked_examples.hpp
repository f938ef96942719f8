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

#ifndef MDMP_WORKED_EXAMPLES_HPP
#define MDMP_WORKED_EXAMPLES_HPP

// Published worked examples for the index-2 5x5 matrix
//
//     [1 0 0 0 0]
//     [1 0 0 1 0]
//     [0 0 0 1 0]
//     [0 0 0 0 0]
//     [0 0 0 0 0]
//
// as printed (five decimals). They serve as regression fixtures.

#include "mdmp/core.hpp"

namespace mdmp::worked {

Matrix index2_matrix();

// [1 0; 1 0]: A~ A = 0, so no Minkowski inverse exists.
Matrix light_cone_matrix();

struct PrintedInverses {
    Matrix moore_penrose;
    Matrix drazin;
    Matrix dmp;
    Matrix minkowski;
    Matrix mdmp;
    Matrix dual_mdmp;
};

PrintedInverses printed_inverses();

// Rows 1-2 of the left/right/power resolvents: 2/(l+1), -1/(l+1), 1/(l+1).
Matrix resolvent_closed_form(double lambda);
// Rows 1-2 of the adjoint resolvent: (l+2)/(l+1)^3, -(l+1)/(l+1)^3, 1/(l+1)^3.
Matrix adjoint_resolvent_closed_form(double lambda);

struct PrintedSystem {
    Vector b;
    Matrix V;   // 5x4, R(V) = N(A^2)
    Matrix W;   // 4x5, N(W) = R(A^2)
    Matrix U;   // decomposition A = U [S K, S L; 0, 0] U*
    RealVector sigma;
    Matrix K;
    Matrix L;
    Matrix G1;
    Vector b1;
    Vector b2;
    Matrix core_drazin;  // (S K)^D
    Matrix power;        // A^k, k = 2
    Matrix E;            // V (W V)^-1 W
    Vector x;
    double min_value = 0.0;
};

PrintedSystem printed_system();

} // namespace mdmp::worked

#endif
