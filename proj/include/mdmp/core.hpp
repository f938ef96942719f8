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

#ifndef MDMP_CORE_HPP
#define MDMP_CORE_HPP

//
// Dense complex matrix foundation: Minkowski metric and adjoint, numerical
// rank and index, the Hartwig-Spindelboeck decomposition and full-rank
// factorizations.
//

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "mdmp/error.hpp"

namespace mdmp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

struct Tolerances {
    double rank_rel_tol = 1e-10;  // singular values <= rank_rel_tol * sigma_max count as zero
    double eq_rel_tol = 1e-8;     // relative Frobenius residual accepted by equation checks
    double cond_max = 1e12;       // largest condition number treated as nonsingular

    // throws InvalidArgument unless every field is positive and rank_rel_tol < 1
    void validate() const;
};

// throws InvalidArgument on NaN/Inf entries or an empty shape
void require_valid(const Matrix& A, const char* what);
void require_square(const Matrix& A, const char* what);

// ||lhs - rhs||_F / max(1, ||rhs||_F)
double relative_residual(const Matrix& lhs, const Matrix& rhs);

double condition_number(const Matrix& M);
RealVector singular_values(const Matrix& A);

// Inverse of a square matrix, refused with `code` when cond(M) > cond_max.
Matrix guarded_inverse(const Matrix& M, const Tolerances& tol, ErrorCode code, const char* what);

Matrix matrix_power(const Matrix& A, Index p);

// G = diag(1, -1, ..., -1) of order n.
Matrix minkowski_metric(Index n);

// A~ = G_n A* G_m for an m x n matrix A.
Matrix minkowski_adjoint(const Matrix& A);

// Number of singular values above rank_rel_tol * max(sigma_max(A), reference_scale).
// A positive reference_scale anchors the cutoff for products and powers whose
// exact value may be zero but whose computed value carries rounding noise.
Index numeric_rank(const Matrix& A, const Tolerances& tol, double reference_scale = 0.0);

// Orthonormal bases of R(A) (columns) and N(A) (columns) at the numeric_rank cutoff.
Matrix range_basis(const Matrix& A, const Tolerances& tol, double reference_scale = 0.0);
Matrix null_basis(const Matrix& A, const Tolerances& tol, double reference_scale = 0.0);

// Ind(A): smallest k >= 0 with rank(A^(k+1)) = rank(A^k).
Index matrix_index(const Matrix& A, const Tolerances& tol);

// A = U [Sigma K, Sigma L; 0, 0] U* with U unitary and K K* + L L* = I_r.
struct HSDecomposition {
    Matrix U;
    RealVector sigma;  // descending, length r
    Matrix K;          // r x r
    Matrix L;          // r x (n - r)
    Index rank = 0;

    Index order() const { return U.rows(); }
    Matrix sigma_k() const;
    Matrix sigma_l() const;
    Matrix reconstruct() const;
};

HSDecomposition hs_decompose(const Matrix& A, const Tolerances& tol);

// Blocks of U* G U = [G1, G2; G2*, G4].
struct MetricPartition {
    Matrix G1;
    Matrix G2;
    Matrix G4;

    // U [G1 G2; G2* G4] U*, which reproduces G.
    Matrix assemble(const Matrix& U) const;
};

MetricPartition metric_partition(const HSDecomposition& dec);

// Delta = (K L) U* G U (K L)*; nonsingular iff rank(A A~) = rank(A).
Matrix delta_matrix(const HSDecomposition& dec);

struct FullRankFactor {
    Matrix B;  // m x r, full column rank
    Matrix C;  // r x n, full row rank
};

// SVD route: B = U_r diag(sigma_r), C = V_r*. Throws ZeroMatrix when rank is 0.
FullRankFactor full_rank_factor(const Matrix& A, const Tolerances& tol, double reference_scale = 0.0);

// A = B1 C1, C_i B_i = B_(i+1) C_(i+1), stopping at the first nonsingular C_k B_k.
struct FullRankChain {
    std::vector<Matrix> B;
    std::vector<Matrix> C;

    Index length() const { return static_cast<Index>(B.size()); }
};

// Throws ZeroMatrix for A = 0 and NilpotentTermination when some C_i B_i
// vanishes (A^k = 0).
FullRankChain full_rank_chain(const Matrix& A, const Tolerances& tol);

} // namespace mdmp

#endif
