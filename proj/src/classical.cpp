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

#include "mdmp/classical.hpp"

#include <array>
#include <utility>

namespace mdmp {

namespace {

constexpr std::array<std::pair<GinvKind, std::string_view>, 8> kKindNames{{
    {GinvKind::MoorePenrose, "moore-penrose"},
    {GinvKind::Drazin, "drazin"},
    {GinvKind::Group, "group"},
    {GinvKind::DMP, "dmp"},
    {GinvKind::Minkowski, "minkowski"},
    {GinvKind::MDMP, "mdmp"},
    {GinvKind::DualMDMP, "dual-mdmp"},
    {GinvKind::MCore, "m-core"},
}};

} // namespace

std::string_view kind_name(GinvKind kind) noexcept
{
    for (const auto& [k, name] : kKindNames)
        if (k == kind)
            return name;
    return "unknown";
}

std::optional<GinvKind> parse_kind(std::string_view name) noexcept
{
    for (const auto& [k, n] : kKindNames)
        if (n == name)
            return k;
    return std::nullopt;
}

Matrix moore_penrose(const Matrix& A, const Tolerances& tol)
{
    require_valid(A, "moore_penrose operand");
    Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Index r = numeric_rank(A, tol);
    if (r == 0)
        return Matrix::Zero(A.cols(), A.rows());
    const RealVector inv = svd.singularValues().head(r).cwiseInverse();
    return svd.matrixV().leftCols(r) * inv.cast<Complex>().asDiagonal() * svd.matrixU().leftCols(r).adjoint();
}

Matrix drazin(const Matrix& A, const Tolerances& tol)
{
    require_square(A, "drazin operand");
    const Index n = A.rows();
    const Index r = numeric_rank(A, tol);
    if (r == 0)
        return Matrix::Zero(n, n);
    if (r == n)
        return guarded_inverse(A, tol, ErrorCode::NearSingularFactor, "A");

    FullRankChain chain;
    try {
        chain = full_rank_chain(A, tol);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NilpotentTermination)
            return Matrix::Zero(n, n);
        throw;
    }
    const Index k = chain.length();
    const Matrix core = chain.C.back() * chain.B.back();
    const Matrix core_inv = guarded_inverse(core, tol, ErrorCode::NearSingularFactor, "C_k B_k");

    Matrix left = chain.B[0];
    for (Index i = 1; i < k; ++i)
        left = left * chain.B[i];
    Matrix right = chain.C[k - 1];
    for (Index i = k - 2; i >= 0; --i)
        right = right * chain.C[i];

    Matrix middle = core_inv;
    for (Index i = 0; i < k; ++i)
        middle = middle * core_inv;
    return left * middle * right;
}

Matrix drazin_hs(const HSDecomposition& dec, const Tolerances& tol)
{
    const Index n = dec.order();
    const Index r = dec.rank;
    const Matrix core_d = drazin(dec.sigma_k(), tol);
    Matrix T = Matrix::Zero(n, n);
    T.topLeftCorner(r, r) = core_d;
    T.topRightCorner(r, n - r) = core_d * core_d * dec.sigma_l();
    return dec.U * T * dec.U.adjoint();
}

Matrix group_inverse(const Matrix& A, const Tolerances& tol)
{
    const Index k = matrix_index(A, tol);
    if (k > 1)
        throw Error(ErrorCode::IndexTooLarge,
                    "group inverse needs Ind(A) <= 1, got " + std::to_string(k));
    return drazin(A, tol);
}

Matrix dmp(const Matrix& A, const Tolerances& tol)
{
    require_square(A, "dmp operand");
    return drazin(A, tol) * A * moore_penrose(A, tol);
}

} // namespace mdmp
