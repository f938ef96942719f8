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

#ifndef MDMP_SRC_DETAIL_HPP
#define MDMP_SRC_DETAIL_HPP

// Scalar-generic kernels shared by the double-precision API and the
// extended-precision resolvent evaluations.

#include <complex>

#include <Eigen/Dense>

namespace mdmp::detail {

template <class Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

// G_n A* G_m: conjugate transpose with the sign of every entry in exactly one
// of (first row, first column) flipped.
template <class Real>
CMatrix<Real> minkowski_adjoint(const CMatrix<Real>& A)
{
    CMatrix<Real> X = A.adjoint();
    for (Eigen::Index j = 1; j < X.cols(); ++j)
        X(0, j) = -X(0, j);
    for (Eigen::Index i = 1; i < X.rows(); ++i)
        X(i, 0) = -X(i, 0);
    return X;
}

template <class Real>
struct Factor {
    CMatrix<Real> B;
    CMatrix<Real> C;
};

// Full-rank factor of prescribed rank r from the SVD.
template <class Real>
Factor<Real> svd_factor(const CMatrix<Real>& A, Eigen::Index r)
{
    Eigen::JacobiSVD<CMatrix<Real>> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Factor<Real> f;
    f.B = svd.matrixU().leftCols(r) * svd.singularValues().head(r).template cast<std::complex<Real>>().asDiagonal();
    f.C = svd.matrixV().leftCols(r).adjoint();
    return f;
}

// C~ (C C~)^-1 (B~ B)^-1 B~ for a full-rank factorization A = B C.
template <class Real>
CMatrix<Real> minkowski_from_factor(const Factor<Real>& f)
{
    const CMatrix<Real> Cs = minkowski_adjoint<Real>(f.C);
    const CMatrix<Real> Bs = minkowski_adjoint<Real>(f.B);
    const CMatrix<Real> CCs = f.C * Cs;
    const CMatrix<Real> BsB = Bs * f.B;
    const CMatrix<Real> right = BsB.partialPivLu().solve(Bs);
    return Cs * CCs.partialPivLu().solve(right);
}

} // namespace mdmp::detail

#endif
