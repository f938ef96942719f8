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

#ifndef MDMP_MINKOWSKI_HPP
#define MDMP_MINKOWSKI_HPP

//
// Generalized inverses in Minkowski space.
//
// The Minkowski inverse A^m solves AXA = A, XAX = X, (AX)~ = AX, (XA)~ = XA
// and exists iff rank(A~ A A~) = rank(A). The m-DMP inverse
//
//     A^{D,m} = A^D A A^m
//
// is the unique solution of XAX = X, XA = A^D A, A^k X = A^k A^m with
// k = Ind(A). It is available here through four independent routes
// (definitional product, Hartwig-Spindelboeck blocks, full-rank chain and
// the (I - (I-A) A A^m)^D composite) so that each can check the others.
//

#include <string>
#include <utility>

#include "mdmp/core.hpp"

namespace mdmp {

struct ExistenceReport {
    bool exists = false;
    Index rank_A = 0;
    Index rank_AAs = 0;    // rank(A A~)
    Index rank_AsA = 0;    // rank(A~ A)
    Index rank_AsAAs = 0;  // rank(A~ A A~)

    std::string describe() const;
};

class NotExistsError : public Error {
public:
    explicit NotExistsError(const ExistenceReport& report)
        : Error(ErrorCode::NotExists, "Minkowski inverse does not exist (" + report.describe() + ")"),
          report_(report) {}

    const ExistenceReport& report() const noexcept { return report_; }

private:
    ExistenceReport report_;
};

ExistenceReport minkowski_exists(const Matrix& A, const Tolerances& tol);

// Full-rank route C~ (C C~)^-1 (B~ B)^-1 B~. Any shape; A = 0 gives 0.
Matrix minkowski_inverse(const Matrix& A, const Tolerances& tol);

// G U [K* (G1 S Delta)^-1, 0; L* (G1 S Delta)^-1, 0] U* G.
// Throws SingularDelta / SingularG1 when the blocks reveal nonexistence.
Matrix minkowski_inverse_hs(const HSDecomposition& dec, const Tolerances& tol);

// Definitional route A^D A A^m (zero when A^k = 0).
Matrix mdmp(const Matrix& A, const Tolerances& tol);

// Both block forms of the m-DMP inverse from one decomposition:
//   metric_form    = U [(SK)^D G1^-1, 0; 0, 0] U* G
//   partition_form = U [(SK)^D, (SK)^D G1^-1 G2; 0, 0] U*
struct HsMdmpForms {
    Matrix metric_form;
    Matrix partition_form;
};

HsMdmpForms mdmp_hs(const HSDecomposition& dec, const MetricPartition& partition, const Tolerances& tol);

// B1...Bk (Ck Bk)^-k Ck...C2 (B1~ B1)^-1 B1~. Throws ZeroPower when A^k = 0.
Matrix mdmp_fullrank(const Matrix& A, const Tolerances& tol);

// {A A^m (I - (I-A) A A^m)^D, (I - (I-A) A A^m)^D A A^m}
std::pair<Matrix, Matrix> mdmp_composite(const Matrix& A, const Tolerances& tol);

// A^{m,D} = A^m A A^D
Matrix dual_mdmp(const Matrix& A, const Tolerances& tol);

// Block form of A^{m,D}:
//   G U [K* D^-1 K X, K* D^-1 K X^2 SL; L* D^-1 K X, L* D^-1 K X^2 SL] U*
// with D = Delta and X = (SK)^D.
Matrix dual_mdmp_hs(const HSDecomposition& dec, const Tolerances& tol);

// Index-one specialization; throws IndexTooLarge when Ind(A) > 1.
Matrix m_core(const Matrix& A, const Tolerances& tol);

// A A^{D,m}: projector onto R(A^k) along N(A^k A^m).
Matrix projector_AAdm(const Matrix& A, const Tolerances& tol);

// A^{D,m} A = A^D A: projector onto R(A^k) along N(A^k).
Matrix projector_AdmA(const Matrix& A, const Tolerances& tol);

} // namespace mdmp

#endif
