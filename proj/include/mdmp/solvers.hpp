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

#ifndef MDMP_SOLVERS_HPP
#define MDMP_SOLVERS_HPP

//
// Linear systems solved by the m-DMP inverse.
//
//   projected   A^k x = A^k A^m b; the general solution is
//               x = A^{D,m} b + (I - A^{D,m} A) v, unique on R(A^k)
//   least-norm  min over x in R(A^k) of ||(A A^+)~ A x - b||_F, which equals
//               ||b2|| for (b1; b2) = U* G b when G1^-1 b1 lies in R((S K)^D)
//   cramer      x_i = det((A^k + E)(i <- A^k A^m b)) / det(A^k + E),
//               E = V (W V)^-1 W with R(V) = N(A^k), N(W) = R(A^k)
//

#include <optional>

#include "mdmp/core.hpp"

namespace mdmp {

struct SolveResult {
    Vector particular;              // A^{D,m} b
    Matrix homogeneous_projector;   // I - A^{D,m} A
    std::optional<Vector> general;  // particular + projector v, when v is given
    bool unique_on_range_ak = false;
    double residual = 0.0;          // ||A^k x - A^k A^m b|| for the particular solution
    double general_residual = 0.0;  // same for the general solution
};

SolveResult solve_projected(const Matrix& A, const Vector& b, const std::optional<Vector>& v,
                            const Tolerances& tol);

struct MinResult {
    Vector x;
    double min_value = 0.0;   // ||b2||
    double objective = 0.0;   // ||(A A^+)~ A x - b||, evaluated directly
    Vector b1;
    Vector b2;
    bool condition_ok = false;
    double condition_residual = 0.0;
};

// Throws FullRank when rank(A) = n and ConditionFailed when G1^-1 b1 is not
// in R((S K)^D).
MinResult least_norm_min(const Matrix& A, const Vector& b, const Tolerances& tol);

struct ComplementBases {
    Matrix V;  // n x (n - t), R(V) = N(A^k)
    Matrix W;  // (n - t) x n, N(W) = R(A^k)
    Index t = 0;
};

// From one SVD of A^k. W is normalized so that W V = I.
ComplementBases build_complement_bases(const Matrix& A, const Tolerances& tol);

// Throws InvalidArgument if the bases do not span the required subspaces and
// SingularWV if W V is ill-conditioned.
void validate_complement_bases(const Matrix& A, const ComplementBases& bases, const Tolerances& tol);

// E = V (W V)^-1 W
Matrix complement_projector(const ComplementBases& bases, const Tolerances& tol);

Vector cramer_solve(const Matrix& A, const Vector& b, const std::optional<ComplementBases>& bases,
                    const Tolerances& tol);

} // namespace mdmp

#endif
