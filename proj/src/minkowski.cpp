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

#include "mdmp/minkowski.hpp"

#include <cmath>
#include <sstream>

#include "mdmp/classical.hpp"

namespace mdmp {

namespace {

void require_exists(const Matrix& A, const Tolerances& tol)
{
    const ExistenceReport report = minkowski_exists(A, tol);
    if (!report.exists)
        throw NotExistsError(report);
}

Matrix product_of(const std::vector<Matrix>& factors, bool reversed, Index first, Index last)
{
    // factors[first..last] multiplied left to right, or right to left when reversed
    Matrix result = factors[reversed ? last : first];
    if (reversed)
        for (Index i = last - 1; i >= first; --i)
            result = result * factors[i];
    else
        for (Index i = first + 1; i <= last; ++i)
            result = result * factors[i];
    return result;
}

} // namespace

std::string ExistenceReport::describe() const
{
    std::ostringstream out;
    out << "rank(A)=" << rank_A << ", rank(AA~)=" << rank_AAs << ", rank(A~A)=" << rank_AsA
        << ", rank(A~AA~)=" << rank_AsAAs;
    return out.str();
}

ExistenceReport minkowski_exists(const Matrix& A, const Tolerances& tol)
{
    require_valid(A, "minkowski_exists operand");
    const Matrix As = minkowski_adjoint(A);
    const double norm = singular_values(A)(0);

    ExistenceReport report;
    report.rank_A = numeric_rank(A, tol);
    report.rank_AAs = numeric_rank(A * As, tol, norm * norm);
    report.rank_AsA = numeric_rank(As * A, tol, norm * norm);
    report.rank_AsAAs = numeric_rank(As * A * As, tol, norm * norm * norm);
    report.exists = report.rank_AsAAs == report.rank_A && report.rank_AAs == report.rank_A &&
                    report.rank_AsA == report.rank_A;
    return report;
}

Matrix minkowski_inverse(const Matrix& A, const Tolerances& tol)
{
    require_valid(A, "minkowski_inverse operand");
    const ExistenceReport report = minkowski_exists(A, tol);
    if (!report.exists)
        throw NotExistsError(report);
    if (report.rank_A == 0)
        return Matrix::Zero(A.cols(), A.rows());

    const FullRankFactor f = full_rank_factor(A, tol);
    const Matrix Bs = minkowski_adjoint(f.B);
    const Matrix Cs = minkowski_adjoint(f.C);
    const Matrix CCs_inv = guarded_inverse(f.C * Cs, tol, ErrorCode::NearSingularFactor, "C C~");
    const Matrix BsB_inv = guarded_inverse(Bs * f.B, tol, ErrorCode::NearSingularFactor, "B~ B");
    return Cs * CCs_inv * BsB_inv * Bs;
}

Matrix minkowski_inverse_hs(const HSDecomposition& dec, const Tolerances& tol)
{
    const Index n = dec.order();
    const Index r = dec.rank;
    const Matrix delta = delta_matrix(dec);
    const MetricPartition part = metric_partition(dec);
    // existence checks first so the error names the failing block
    guarded_inverse(delta, tol, ErrorCode::SingularDelta, "Delta");
    guarded_inverse(part.G1, tol, ErrorCode::SingularG1, "G1");

    const Matrix core = part.G1 * dec.sigma.cast<Complex>().asDiagonal() * delta;
    const Matrix core_inv = guarded_inverse(core, tol, ErrorCode::NearSingularFactor, "G1 Sigma Delta");
    Matrix T = Matrix::Zero(n, n);
    T.topLeftCorner(r, r) = dec.K.adjoint() * core_inv;
    T.bottomLeftCorner(n - r, r) = dec.L.adjoint() * core_inv;
    const Matrix G = minkowski_metric(n);
    return G * dec.U * T * dec.U.adjoint() * G;
}

Matrix mdmp(const Matrix& A, const Tolerances& tol)
{
    require_square(A, "mdmp operand");
    const Matrix Am = minkowski_inverse(A, tol);
    const Index n = A.rows();
    const Index k = matrix_index(A, tol);
    const double norm = singular_values(A)(0);
    if (numeric_rank(matrix_power(A, k), tol, std::pow(norm, static_cast<double>(k))) == 0)
        return Matrix::Zero(n, n);
    return drazin(A, tol) * A * Am;
}

HsMdmpForms mdmp_hs(const HSDecomposition& dec, const MetricPartition& partition, const Tolerances& tol)
{
    const Index n = dec.order();
    const Index r = dec.rank;
    guarded_inverse(delta_matrix(dec), tol, ErrorCode::SingularDelta, "Delta");
    const Matrix G1_inv = guarded_inverse(partition.G1, tol, ErrorCode::SingularG1, "G1");
    const Matrix core_d = drazin(dec.sigma_k(), tol);

    HsMdmpForms forms;
    Matrix T = Matrix::Zero(n, n);
    T.topLeftCorner(r, r) = core_d * G1_inv;
    forms.metric_form = dec.U * T * dec.U.adjoint() * minkowski_metric(n);

    T.setZero();
    T.topLeftCorner(r, r) = core_d;
    T.topRightCorner(r, n - r) = core_d * G1_inv * partition.G2;
    forms.partition_form = dec.U * T * dec.U.adjoint();
    return forms;
}

Matrix mdmp_fullrank(const Matrix& A, const Tolerances& tol)
{
    require_square(A, "mdmp_fullrank operand");
    require_exists(A, tol);
    FullRankChain chain;
    try {
        chain = full_rank_chain(A, tol);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NilpotentTermination || e.code() == ErrorCode::ZeroMatrix)
            throw Error(ErrorCode::ZeroPower, "A^k = 0, the full-rank chain formula is undefined");
        throw;
    }
    const Index k = chain.length();
    const Matrix core_inv =
        guarded_inverse(chain.C.back() * chain.B.back(), tol, ErrorCode::NearSingularFactor, "C_k B_k");
    Matrix middle = Matrix::Identity(core_inv.rows(), core_inv.cols());
    for (Index i = 0; i < k; ++i)
        middle = middle * core_inv;

    const Matrix& B1 = chain.B.front();
    const Matrix B1s = minkowski_adjoint(B1);
    const Matrix B1sB1_inv = guarded_inverse(B1s * B1, tol, ErrorCode::NearSingularFactor, "B1~ B1");

    Matrix result = product_of(chain.B, false, 0, k - 1) * middle;
    if (k >= 2)
        result = result * product_of(chain.C, true, 1, k - 1);
    return result * B1sB1_inv * B1s;
}

std::pair<Matrix, Matrix> mdmp_composite(const Matrix& A, const Tolerances& tol)
{
    require_square(A, "mdmp_composite operand");
    const Index n = A.rows();
    const Matrix I = Matrix::Identity(n, n);
    const Matrix P = A * minkowski_inverse(A, tol);
    const Matrix D = drazin(I - (I - A) * P, tol);
    return {P * D, D * P};
}

Matrix dual_mdmp(const Matrix& A, const Tolerances& tol)
{
    require_square(A, "dual_mdmp operand");
    const Matrix Am = minkowski_inverse(A, tol);
    return Am * A * drazin(A, tol);
}

Matrix dual_mdmp_hs(const HSDecomposition& dec, const Tolerances& tol)
{
    const Index n = dec.order();
    const Index r = dec.rank;
    const Matrix delta_inv = guarded_inverse(delta_matrix(dec), tol, ErrorCode::SingularDelta, "Delta");
    guarded_inverse(metric_partition(dec).G1, tol, ErrorCode::SingularG1, "G1");
    const Matrix core_d = drazin(dec.sigma_k(), tol);
    const Matrix left = delta_inv * dec.K * core_d;
    const Matrix right = delta_inv * dec.K * core_d * core_d * dec.sigma_l();

    Matrix T(n, n);
    T.topLeftCorner(r, r) = dec.K.adjoint() * left;
    T.topRightCorner(r, n - r) = dec.K.adjoint() * right;
    T.bottomLeftCorner(n - r, r) = dec.L.adjoint() * left;
    T.bottomRightCorner(n - r, n - r) = dec.L.adjoint() * right;
    return minkowski_metric(n) * dec.U * T * dec.U.adjoint();
}

Matrix m_core(const Matrix& A, const Tolerances& tol)
{
    require_square(A, "m_core operand");
    const Index k = matrix_index(A, tol);
    if (k > 1)
        throw Error(ErrorCode::IndexTooLarge, "m-core inverse needs Ind(A) <= 1, got " + std::to_string(k));
    return mdmp(A, tol);
}

Matrix projector_AAdm(const Matrix& A, const Tolerances& tol)
{
    return A * mdmp(A, tol);
}

Matrix projector_AdmA(const Matrix& A, const Tolerances& tol)
{
    return mdmp(A, tol) * A;
}

} // namespace mdmp
