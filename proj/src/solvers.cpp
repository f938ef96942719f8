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

#include "mdmp/solvers.hpp"

#include <cmath>
#include <sstream>

#include "mdmp/classical.hpp"
#include "mdmp/minkowski.hpp"

namespace mdmp {

namespace {

struct PowerData {
    Index k = 0;
    Matrix Ak;
    double scale = 0.0;  // sigma_max(A)^k, the noise floor reference for A^k
    Index t = 0;         // rank(A^k)
};

PowerData power_data(const Matrix& A, const Tolerances& tol)
{
    PowerData p;
    p.k = matrix_index(A, tol);
    p.Ak = matrix_power(A, p.k);
    p.scale = std::pow(singular_values(A)(0), static_cast<double>(p.k));
    p.t = numeric_rank(p.Ak, tol, p.scale);
    return p;
}

void require_vector(const Matrix& A, const Vector& b, const char* what)
{
    if (b.size() != A.rows()) {
        std::ostringstream msg;
        msg << what << " has length " << b.size() << ", expected " << A.rows();
        throw Error(ErrorCode::ShapeMismatch, msg.str());
    }
    if (!b.allFinite())
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " has non-finite entries");
}

// ||(I - Q Q*) y|| / ||y||, zero for y = 0
double outside_range(const Matrix& Q, const Vector& y)
{
    const double norm = y.norm();
    if (norm == 0.0)
        return 0.0;
    const Vector rest = y - Q * (Q.adjoint() * y);
    return rest.norm() / norm;
}

} // namespace

SolveResult solve_projected(const Matrix& A, const Vector& b, const std::optional<Vector>& v,
                            const Tolerances& tol)
{
    require_square(A, "solve_projected operand");
    require_vector(A, b, "right-hand side b");
    if (v)
        require_vector(A, *v, "free vector v");

    const Matrix X = mdmp(A, tol);
    const Matrix Am = minkowski_inverse(A, tol);
    const PowerData p = power_data(A, tol);
    const Index n = A.rows();
    const Vector rhs = p.Ak * (Am * b);

    SolveResult result;
    result.particular = X * b;
    result.homogeneous_projector = Matrix::Identity(n, n) - X * A;
    result.residual = (p.Ak * result.particular - rhs).norm();
    const Matrix Q = range_basis(p.Ak, tol, p.scale);
    result.unique_on_range_ak = outside_range(Q, result.particular) <= tol.eq_rel_tol;
    if (v) {
        result.general = result.particular + result.homogeneous_projector * *v;
        result.general_residual = (p.Ak * *result.general - rhs).norm();
    }
    return result;
}

MinResult least_norm_min(const Matrix& A, const Vector& b, const Tolerances& tol)
{
    require_square(A, "least_norm_min operand");
    require_vector(A, b, "right-hand side b");
    const Index n = A.rows();
    const Index r = numeric_rank(A, tol);
    if (r == n)
        throw Error(ErrorCode::FullRank, "least-norm problem needs rank(A) < n");
    const ExistenceReport report = minkowski_exists(A, tol);
    if (!report.exists)
        throw NotExistsError(report);

    // b1, b2 and the inverse come from the same decomposition, U is not unique
    const HSDecomposition dec = hs_decompose(A, tol);
    const MetricPartition part = metric_partition(dec);
    const Vector split = dec.U.adjoint() * (minkowski_metric(n) * b);

    MinResult result;
    result.b1 = split.head(r);
    result.b2 = split.tail(n - r);

    const Matrix G1_inv = guarded_inverse(part.G1, tol, ErrorCode::SingularG1, "G1");
    const Matrix core_d = drazin(dec.sigma_k(), tol);
    const Vector y = G1_inv * result.b1;
    result.condition_residual = outside_range(range_basis(core_d, tol), y);
    result.condition_ok = result.condition_residual <= tol.eq_rel_tol;
    if (!result.condition_ok) {
        std::ostringstream msg;
        msg << "G1^-1 b1 is not in the range of (S K)^D (relative residual " << result.condition_residual
            << " > " << tol.eq_rel_tol << ")";
        throw Error(ErrorCode::ConditionFailed, msg.str());
    }

    result.x = mdmp_hs(dec, part, tol).metric_form * b;
    result.min_value = result.b2.norm();
    const Matrix AAp = A * moore_penrose(A, tol);
    result.objective = (minkowski_adjoint(AAp) * (A * result.x) - b).norm();
    return result;
}

ComplementBases build_complement_bases(const Matrix& A, const Tolerances& tol)
{
    require_square(A, "build_complement_bases operand");
    const PowerData p = power_data(A, tol);
    const Index n = A.rows();
    if (p.t == n)
        throw Error(ErrorCode::FullRank, "A^k is nonsingular, N(A^k) is trivial");

    Eigen::JacobiSVD<Matrix> svd(p.Ak, Eigen::ComputeFullU | Eigen::ComputeFullV);
    ComplementBases bases;
    bases.t = p.t;
    bases.V = svd.matrixV().rightCols(n - p.t);
    // U2* already annihilates R(A^k); rescale by (U2* V)^-1 so that W V = I.
    const Matrix U2s = svd.matrixU().rightCols(n - p.t).adjoint();
    bases.W = guarded_inverse(U2s * bases.V, tol, ErrorCode::SingularWV, "U2* V") * U2s;
    return bases;
}

void validate_complement_bases(const Matrix& A, const ComplementBases& bases, const Tolerances& tol)
{
    require_square(A, "validate_complement_bases operand");
    const PowerData p = power_data(A, tol);
    const Index n = A.rows();
    const Index d = n - p.t;
    if (bases.V.rows() != n || bases.V.cols() != d || bases.W.rows() != d || bases.W.cols() != n) {
        std::ostringstream msg;
        msg << "expected V " << n << "x" << d << " and W " << d << "x" << n << " for rank(A^k) = " << p.t
            << ", got V " << bases.V.rows() << "x" << bases.V.cols() << " and W " << bases.W.rows() << "x"
            << bases.W.cols();
        throw Error(ErrorCode::ShapeMismatch, msg.str());
    }
    if (d == 0)
        return;
    const double ak = std::max(1.0, p.Ak.norm());
    if ((p.Ak * bases.V).norm() > tol.eq_rel_tol * ak * std::max(1.0, bases.V.norm()) ||
        numeric_rank(bases.V, tol) != d)
        throw Error(ErrorCode::InvalidArgument, "columns of V do not span N(A^k)");
    if ((bases.W * p.Ak).norm() > tol.eq_rel_tol * ak * std::max(1.0, bases.W.norm()) ||
        numeric_rank(bases.W, tol) != d)
        throw Error(ErrorCode::InvalidArgument, "N(W) is not R(A^k)");
    guarded_inverse(bases.W * bases.V, tol, ErrorCode::SingularWV, "W V");
}

Matrix complement_projector(const ComplementBases& bases, const Tolerances& tol)
{
    const Index n = bases.V.rows();
    if (bases.V.cols() == 0)
        return Matrix::Zero(n, n);
    return bases.V * guarded_inverse(bases.W * bases.V, tol, ErrorCode::SingularWV, "W V") * bases.W;
}

Vector cramer_solve(const Matrix& A, const Vector& b, const std::optional<ComplementBases>& bases,
                    const Tolerances& tol)
{
    require_square(A, "cramer_solve operand");
    require_vector(A, b, "right-hand side b");
    const ExistenceReport report = minkowski_exists(A, tol);
    if (!report.exists)
        throw NotExistsError(report);

    const PowerData p = power_data(A, tol);
    const Index n = A.rows();
    ComplementBases chosen;
    if (bases) {
        chosen = *bases;
    } else if (p.t == n) {
        // A nonsingular: N(A^k) = 0 and E vanishes
        chosen.V = Matrix::Zero(n, 0);
        chosen.W = Matrix::Zero(0, n);
        chosen.t = n;
    } else {
        chosen = build_complement_bases(A, tol);
    }
    validate_complement_bases(A, chosen, tol);

    const Matrix bordered = p.Ak + complement_projector(chosen, tol);
    const double cond = condition_number(bordered);
    if (!(cond <= tol.cond_max)) {
        std::ostringstream msg;
        msg << "A^k + E is numerically singular (cond = " << cond << ")";
        throw Error(ErrorCode::SingularBordered, msg.str());
    }
    const Complex det = bordered.partialPivLu().determinant();
    const Vector rhs = p.Ak * (minkowski_inverse(A, tol) * b);

    Vector x(n);
    for (Index i = 0; i < n; ++i) {
        Matrix replaced = bordered;
        replaced.col(i) = rhs;
        x(i) = replaced.partialPivLu().determinant() / det;
    }
    return x;
}

} // namespace mdmp
