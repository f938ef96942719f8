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

#include "mdmp/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "detail.hpp"

namespace mdmp {

std::string_view error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::NilpotentTermination: return "NilpotentTermination";
    case ErrorCode::IndexTooLarge: return "IndexTooLarge";
    case ErrorCode::NotExists: return "NotExists";
    case ErrorCode::NearSingularFactor: return "NearSingularFactor";
    case ErrorCode::SingularDelta: return "SingularDelta";
    case ErrorCode::SingularG1: return "SingularG1";
    case ErrorCode::ZeroPower: return "ZeroPower";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SpectrumNotStable: return "SpectrumNotStable";
    case ErrorCode::ConditionFailed: return "ConditionFailed";
    case ErrorCode::FullRank: return "FullRank";
    case ErrorCode::SingularWV: return "SingularWV";
    case ErrorCode::SingularBordered: return "SingularBordered";
    }
    return "Unknown";
}

void Tolerances::validate() const
{
    if (!(rank_rel_tol > 0.0 && rank_rel_tol < 1.0))
        throw Error(ErrorCode::InvalidArgument, "rank_rel_tol must lie in (0, 1)");
    if (!(eq_rel_tol > 0.0))
        throw Error(ErrorCode::InvalidArgument, "eq_rel_tol must be positive");
    if (!(cond_max > 0.0))
        throw Error(ErrorCode::InvalidArgument, "cond_max must be positive");
}

void require_valid(const Matrix& A, const char* what)
{
    if (A.rows() < 1 || A.cols() < 1)
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " must have positive dimensions");
    if (!A.allFinite())
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " has non-finite entries");
}

void require_square(const Matrix& A, const char* what)
{
    require_valid(A, what);
    if (A.rows() != A.cols()) {
        std::ostringstream msg;
        msg << what << " must be square, got " << A.rows() << "x" << A.cols();
        throw Error(ErrorCode::ShapeMismatch, msg.str());
    }
}

double relative_residual(const Matrix& lhs, const Matrix& rhs)
{
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw Error(ErrorCode::ShapeMismatch, "residual operands differ in shape");
    return (lhs - rhs).norm() / std::max(1.0, rhs.norm());
}

RealVector singular_values(const Matrix& A)
{
    if (A.size() == 0)
        return RealVector();
    if (!A.allFinite())
        throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
    return Eigen::JacobiSVD<Matrix>(A).singularValues();
}

double condition_number(const Matrix& M)
{
    const RealVector s = singular_values(M);
    if (s.size() == 0)
        return 1.0;
    const double smin = s(s.size() - 1);
    if (smin == 0.0)
        return std::numeric_limits<double>::infinity();
    return s(0) / smin;
}

Matrix guarded_inverse(const Matrix& M, const Tolerances& tol, ErrorCode code, const char* what)
{
    require_square(M, what);
    const double cond = condition_number(M);
    if (!(cond <= tol.cond_max)) {
        std::ostringstream msg;
        msg << what << " is numerically singular (cond = " << cond << ", limit " << tol.cond_max << ")";
        throw Error(code, msg.str());
    }
    return M.partialPivLu().inverse();
}

Matrix matrix_power(const Matrix& A, Index p)
{
    require_square(A, "matrix_power operand");
    if (p < 0)
        throw Error(ErrorCode::InvalidArgument, "negative matrix power");
    Matrix result = Matrix::Identity(A.rows(), A.cols());
    for (Index i = 0; i < p; ++i)
        result = result * A;
    return result;
}

Matrix minkowski_metric(Index n)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "metric order must be positive");
    Matrix G = -Matrix::Identity(n, n);
    G(0, 0) = 1.0;
    return G;
}

Matrix minkowski_adjoint(const Matrix& A)
{
    return detail::minkowski_adjoint<double>(A);
}

Index numeric_rank(const Matrix& A, const Tolerances& tol, double reference_scale)
{
    const RealVector s = singular_values(A);
    if (s.size() == 0)
        return 0;
    const double scale = std::max(s(0), reference_scale);
    if (scale == 0.0)
        return 0;
    const double cutoff = tol.rank_rel_tol * scale;
    Index r = 0;
    while (r < s.size() && s(r) > cutoff)
        ++r;
    return r;
}

Matrix range_basis(const Matrix& A, const Tolerances& tol, double reference_scale)
{
    const Index r = numeric_rank(A, tol, reference_scale);
    if (r == 0)
        return Matrix::Zero(A.rows(), 0);
    Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU);
    return svd.matrixU().leftCols(r);
}

Matrix null_basis(const Matrix& A, const Tolerances& tol, double reference_scale)
{
    const Index r = numeric_rank(A, tol, reference_scale);
    Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeFullV);
    return svd.matrixV().rightCols(A.cols() - r);
}

Index matrix_index(const Matrix& A, const Tolerances& tol)
{
    require_square(A, "matrix_index operand");
    const Index n = A.rows();
    const double norm = singular_values(A)(0);
    Index previous = n;
    Matrix power = A;
    for (Index k = 0; k <= n; ++k) {
        const Index r = numeric_rank(power, tol, std::pow(norm, static_cast<double>(k + 1)));
        if (r == previous)
            return k;
        previous = r;
        power = power * A;
    }
    return n;
}

Matrix HSDecomposition::sigma_k() const
{
    return sigma.cast<Complex>().asDiagonal() * K;
}

Matrix HSDecomposition::sigma_l() const
{
    return sigma.cast<Complex>().asDiagonal() * L;
}

Matrix HSDecomposition::reconstruct() const
{
    const Index n = order();
    Matrix T = Matrix::Zero(n, n);
    T.topLeftCorner(rank, rank) = sigma_k();
    T.topRightCorner(rank, n - rank) = sigma_l();
    return U * T * U.adjoint();
}

HSDecomposition hs_decompose(const Matrix& A, const Tolerances& tol)
{
    require_square(A, "hs_decompose operand");
    const Index n = A.rows();
    Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const RealVector& s = svd.singularValues();
    const Index r = numeric_rank(A, tol);
    if (r == 0)
        throw Error(ErrorCode::ZeroMatrix, "Hartwig-Spindelboeck decomposition needs rank >= 1");

    HSDecomposition dec;
    dec.U = svd.matrixU();
    dec.sigma = s.head(r);
    dec.rank = r;
    const Matrix KL = svd.matrixV().leftCols(r).adjoint() * dec.U;
    dec.K = KL.leftCols(r);
    dec.L = KL.rightCols(n - r);
    return dec;
}

Matrix MetricPartition::assemble(const Matrix& U) const
{
    const Index r = G1.rows();
    const Index n = r + G4.rows();
    Matrix M(n, n);
    M.topLeftCorner(r, r) = G1;
    M.topRightCorner(r, n - r) = G2;
    M.bottomLeftCorner(n - r, r) = G2.adjoint();
    M.bottomRightCorner(n - r, n - r) = G4;
    return U * M * U.adjoint();
}

MetricPartition metric_partition(const HSDecomposition& dec)
{
    const Index n = dec.order();
    const Index r = dec.rank;
    const Matrix UGU = dec.U.adjoint() * minkowski_metric(n) * dec.U;
    return MetricPartition{UGU.topLeftCorner(r, r), UGU.topRightCorner(r, n - r),
                           UGU.bottomRightCorner(n - r, n - r)};
}

Matrix delta_matrix(const HSDecomposition& dec)
{
    const Index n = dec.order();
    Matrix KL(dec.rank, n);
    KL << dec.K, dec.L;
    return KL * dec.U.adjoint() * minkowski_metric(n) * dec.U * KL.adjoint();
}

FullRankFactor full_rank_factor(const Matrix& A, const Tolerances& tol, double reference_scale)
{
    require_valid(A, "full_rank_factor operand");
    const Index r = numeric_rank(A, tol, reference_scale);
    if (r == 0)
        throw Error(ErrorCode::ZeroMatrix, "full-rank factorization of a zero matrix");
    auto f = detail::svd_factor<double>(A, r);
    return FullRankFactor{std::move(f.B), std::move(f.C)};
}

FullRankChain full_rank_chain(const Matrix& A, const Tolerances& tol)
{
    require_square(A, "full_rank_chain operand");
    FullRankChain chain;
    auto first = full_rank_factor(A, tol);
    chain.B.push_back(std::move(first.B));
    chain.C.push_back(std::move(first.C));

    // C_i has orthonormal rows, so C_i B_i carries rounding of order eps ||B_i||.
    // Scaling by ||A||^(i+1) instead wipes out the core whenever ||A|| comes
    // from a large nilpotent coupling rather than from the eigenvalues.
    for (Index i = 1; i <= A.rows() + 1; ++i) {
        const Matrix CB = chain.C.back() * chain.B.back();
        const Index size = CB.rows();
        const Index r = numeric_rank(CB, tol, singular_values(chain.B.back())(0));
        if (r == size)
            return chain;
        if (r == 0)
            throw Error(ErrorCode::NilpotentTermination,
                        "C_i B_i vanished at step " + std::to_string(i) + " (A is nilpotent)");
        auto next = detail::svd_factor<double>(CB, r);
        chain.B.push_back(std::move(next.B));
        chain.C.push_back(std::move(next.C));
    }
    throw Error(ErrorCode::NilpotentTermination, "full-rank chain did not stabilize");
}

} // namespace mdmp
