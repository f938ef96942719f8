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

#include "mdmp/verify.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

#include "mdmp/classical.hpp"
#include "mdmp/minkowski.hpp"

namespace mdmp {

namespace {

using ordered_json = nlohmann::ordered_json;

void require_shape(const Matrix& M, Index rows, Index cols, const char* what)
{
    if (M.rows() != rows || M.cols() != cols) {
        std::ostringstream msg;
        msg << what << " must be " << rows << "x" << cols << ", got " << M.rows() << "x" << M.cols();
        throw Error(ErrorCode::ShapeMismatch, msg.str());
    }
}

double spectral_norm(const Matrix& M)
{
    const RealVector s = singular_values(M);
    return s.size() == 0 ? 0.0 : s(0);
}

// Drop singular values that are noise relative to the scale the product was
// formed at; A^2 A^m of a nilpotent A is ~1e-15, not a rank-n matrix.
Matrix truncate_to_rank(const Matrix& M, const Tolerances& tol, double reference_scale)
{
    Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Index r = numeric_rank(M, tol, reference_scale);
    return svd.matrixU().leftCols(r) * svd.singularValues().head(r).cast<Complex>().asDiagonal() *
           svd.matrixV().leftCols(r).adjoint();
}

// Everything the m-DMP checks need, computed once.
struct Context {
    Index n = 0;
    Index k = 0;
    Matrix AD;
    Matrix Am;
    Matrix Ak;
    Matrix Ak1;
    double ak_scale = 0.0;

    Context(const Matrix& A, const Tolerances& tol)
    {
        require_square(A, "characterization operand");
        const ExistenceReport report = minkowski_exists(A, tol);
        if (!report.exists)
            throw NotExistsError(report);
        n = A.rows();
        k = matrix_index(A, tol);
        AD = drazin(A, tol);
        Am = minkowski_inverse(A, tol);
        Ak = matrix_power(A, k);
        Ak1 = Ak * A;
        ak_scale = std::pow(spectral_norm(A), static_cast<double>(k));
    }
};

ordered_json report_json(const EquationReport& r)
{
    ordered_json out;
    out["system"] = r.system_name;
    out["tolerance"] = r.tolerance;
    out["passed"] = r.passed;
    ordered_json equations = ordered_json::array();
    for (const auto& e : r.equations) {
        ordered_json item;
        item["label"] = e.label;
        item["absolute"] = e.absolute;
        item["relative"] = e.relative;
        equations.push_back(std::move(item));
    }
    out["equations"] = std::move(equations);
    ordered_json flags = ordered_json::object();
    for (const auto& f : r.flags)
        flags[f.label] = f.value;
    out["flags"] = std::move(flags);
    return out;
}

bool is_zero(const Matrix& M, double tol)
{
    return M.norm() <= tol;
}

} // namespace

void EquationReport::add(std::string label, const Matrix& lhs, const Matrix& rhs)
{
    const double absolute = (lhs - rhs).norm();
    add_residual(std::move(label), absolute, relative_residual(lhs, rhs));
}

void EquationReport::add_residual(std::string label, double absolute, double relative)
{
    equations.push_back(EquationResidual{std::move(label), absolute, relative});
    if (!(relative <= tolerance))
        passed = false;
}

void EquationReport::add_flag(std::string label, bool value)
{
    flags.push_back(ReportFlag{std::move(label), value});
}

const EquationResidual* EquationReport::find(const std::string& label) const
{
    for (const auto& e : equations)
        if (e.label == label)
            return &e;
    return nullptr;
}

std::optional<bool> EquationReport::flag(const std::string& label) const
{
    for (const auto& f : flags)
        if (f.label == label)
            return f.value;
    return std::nullopt;
}

std::string EquationReport::to_json(int indent) const
{
    return report_json(*this).dump(indent);
}

std::string reports_to_json(const std::vector<EquationReport>& reports, int indent)
{
    ordered_json out = ordered_json::array();
    for (const auto& r : reports)
        out.push_back(report_json(r));
    return out.dump(indent);
}

double range_inclusion_residual(const Matrix& X, const Matrix& M, const Tolerances& tol, double reference_scale)
{
    const Matrix Q = range_basis(M, tol, reference_scale);
    const Matrix outside = X - Q * (Q.adjoint() * X);
    return outside.norm() / std::max(1.0, X.norm());
}

double null_inclusion_residual(const Matrix& X, const Matrix& M, const Tolerances& tol, double reference_scale)
{
    const Matrix Z = null_basis(M, tol, reference_scale);
    if (Z.cols() == 0)
        return 0.0;
    return (X * Z).norm() / std::max(1.0, X.norm());
}

Matrix oblique_projector(const Matrix& T, const Matrix& S, const Tolerances& tol, double t_scale, double s_scale)
{
    require_square(T, "projector range operand");
    require_square(S, "projector null-space operand");
    const Index n = T.rows();
    const Matrix Q = range_basis(T, tol, t_scale);
    const Matrix Y = range_basis(S.adjoint(), tol, s_scale).adjoint();
    if (Q.cols() != Y.rows())
        throw Error(ErrorCode::InvalidArgument, "range and null space are not complementary (dimensions differ)");
    if (Q.cols() == 0)
        return Matrix::Zero(n, n);
    return Q * guarded_inverse(Y * Q, tol, ErrorCode::NearSingularFactor, "Y Q") * Y;
}

EquationReport check_penrose(const Matrix& A, const Matrix& X, const Tolerances& tol)
{
    require_valid(A, "A");
    require_shape(X, A.cols(), A.rows(), "X");
    EquationReport r("moore-penrose", tol.eq_rel_tol);
    const Matrix AX = A * X;
    const Matrix XA = X * A;
    r.add("AXA = A", AX * A, A);
    r.add("XAX = X", XA * X, X);
    r.add("(AX)* = AX", AX.adjoint(), AX);
    r.add("(XA)* = XA", XA.adjoint(), XA);
    return r;
}

EquationReport check_minkowski(const Matrix& A, const Matrix& X, const Tolerances& tol)
{
    require_valid(A, "A");
    require_shape(X, A.cols(), A.rows(), "X");
    EquationReport r("minkowski", tol.eq_rel_tol);
    const Matrix AX = A * X;
    const Matrix XA = X * A;
    r.add("AXA = A", AX * A, A);
    r.add("XAX = X", XA * X, X);
    r.add("(AX)~ = AX", minkowski_adjoint(AX), AX);
    r.add("(XA)~ = XA", minkowski_adjoint(XA), XA);
    return r;
}

EquationReport check_drazin(const Matrix& A, const Matrix& X, const Tolerances& tol)
{
    require_square(A, "A");
    require_shape(X, A.rows(), A.cols(), "X");
    EquationReport r("drazin", tol.eq_rel_tol);
    const Index k = matrix_index(A, tol);
    const Matrix Ak = matrix_power(A, k);
    r.add("XAX = X", X * A * X, X);
    r.add("AX = XA", A * X, X * A);
    r.add("A^(k+1) X = A^k", Ak * A * X, Ak);
    return r;
}

EquationReport check_mdmp_system(const Matrix& A, const Matrix& X, const Tolerances& tol)
{
    require_square(A, "A");
    require_shape(X, A.rows(), A.cols(), "X");
    const Context c(A, tol);
    EquationReport r("mdmp", tol.eq_rel_tol);
    r.add("XAX = X", X * A * X, X);
    r.add("XA = A^D A", X * A, c.AD * A);
    r.add("A^k X = A^k A^m", c.Ak * X, c.Ak * c.Am);
    return r;
}

std::vector<EquationReport> check_characterizations(const Matrix& A, const Matrix& X, const Tolerances& tol)
{
    require_square(A, "A");
    require_shape(X, A.rows(), A.cols(), "X");
    const Context c(A, tol);
    const double eq = tol.eq_rel_tol;
    const Matrix AkAm = c.Ak * c.Am;
    const double akam_scale = c.ak_scale * spectral_norm(c.Am);
    const double in_range = range_inclusion_residual(X, c.Ak, tol, c.ak_scale);
    const double null_contained = null_inclusion_residual(X, AkAm, tol, akam_scale);
    const Matrix AX = A * X;
    const Matrix X2 = X * X;

    std::vector<EquationReport> reports;
    {
        EquationReport r("range-drazin", eq);
        r.add_residual("R(X) in R(A^k)", in_range, in_range);
        r.add("A^D X = A^D A^m", c.AD * X, c.AD * c.Am);
        reports.push_back(std::move(r));
    }
    {
        EquationReport r("range-power", eq);
        r.add_residual("R(X) in R(A^k)", in_range, in_range);
        r.add("A^k X = A^k A^m", c.Ak * X, AkAm);
        reports.push_back(std::move(r));
    }
    {
        EquationReport r("null-right", eq);
        r.add_residual("N(A^k A^m) in N(X)", null_contained, null_contained);
        r.add("XA = AA^D", X * A, A * c.AD);
        reports.push_back(std::move(r));
    }
    {
        EquationReport r("null-power", eq);
        r.add_residual("N(A^k A^m) in N(X)", null_contained, null_contained);
        r.add("XA^(k+1) = A^k", X * c.Ak1, c.Ak);
        reports.push_back(std::move(r));
    }
    {
        EquationReport r("square-core", eq);
        r.add("AX^2 = X", A * X2, X);
        r.add("AX = A^2 A^D A^m", AX, A * A * c.AD * c.Am);
        reports.push_back(std::move(r));
    }
    {
        EquationReport r("square-projector", eq);
        r.add("AX^2 = X", A * X2, X);
        const Matrix ADAm = c.AD * c.Am;
        const Matrix P = oblique_projector(c.Ak, ADAm, tol, c.ak_scale, spectral_norm(c.AD) * spectral_norm(c.Am));
        r.add("AX = P[R(A^k), N(A^D A^m)]", AX, P);
        reports.push_back(std::move(r));
    }
    {
        EquationReport r("square-power", eq);
        r.add("AX^2 = X", A * X2, X);
        r.add("A^k X = A^k A^m", c.Ak * X, AkAm);
        reports.push_back(std::move(r));
    }
    return reports;
}

EquationReport property_suite(const Matrix& A, const Tolerances& tol)
{
    const Context c(A, tol);
    const double eq = tol.eq_rel_tol;
    const Index n = c.n;
    const Matrix X = c.AD * A * c.Am;
    const Matrix AX = A * X;
    const Matrix XA = X * A;
    const double a_norm = spectral_norm(A);
    const double akam_scale = c.ak_scale * spectral_norm(c.Am);
    EquationReport r("properties", eq);

    // rank and range structure
    const Index rank_x = numeric_rank(X, tol, spectral_norm(c.AD) * a_norm * spectral_norm(c.Am));
    const Index rank_ak = numeric_rank(c.Ak, tol, c.ak_scale);
    const double rank_gap = std::abs(static_cast<double>(rank_x - rank_ak));
    r.add_residual("rank(X) = rank(A^k)", rank_gap, rank_gap);
    const double in_range = range_inclusion_residual(X, c.Ak, tol, c.ak_scale);
    r.add_residual("R(X) in R(A^k)", in_range, in_range);
    const double null_contained = null_inclusion_residual(X, c.Ak * c.Am, tol, akam_scale);
    r.add_residual("N(A^k A^m) in N(X)", null_contained, null_contained);

    // projectors
    r.add("(AX)^2 = AX", AX * AX, AX);
    r.add("(XA)^2 = XA", XA * XA, XA);
    r.add("XA = A^D A", XA, c.AD * A);
    r.add("AX = P[R(A^k), N(A^k A^m)]", AX, oblique_projector(c.Ak, c.Ak * c.Am, tol, c.ak_scale, akam_scale));
    r.add("XA = P[R(A^k), N(A^k)]", XA, oblique_projector(c.Ak, c.Ak, tol, c.ak_scale, c.ak_scale));

    // powers: X^l = (A^D A^m)^(l/2) for even l, A (A^D A^m)^((l+1)/2) for odd l
    const Matrix ADAm = c.AD * c.Am;
    Matrix Xl = Matrix::Identity(n, n);
    for (int l = 1; l <= 4; ++l) {
        Xl = Xl * X;
        const Matrix expected = (l % 2 == 0) ? matrix_power(ADAm, l / 2) : Matrix(A * matrix_power(ADAm, (l + 1) / 2));
        r.add("X^" + std::to_string(l) + " power law", Xl, expected);
    }

    const Matrix A2Am = truncate_to_rank(A * A * c.Am, tol, a_norm * a_norm * spectral_norm(c.Am));
    r.add("X = (A^2 A^m)^D", X, drazin(A2Am, tol));
    r.add("(X^D)^D = X", drazin(drazin(X, tol), tol), X);

    // AX = XA  <=>  X = A^D  <=>  N(A~) in N(A^k)
    const bool commutes = relative_residual(AX, XA) <= eq;
    const bool equals_drazin = relative_residual(X, c.AD) <= eq;
    const bool null_adjoint = null_inclusion_residual(c.Ak, minkowski_adjoint(A), tol, a_norm) <= eq;
    r.add_flag("AX = XA", commutes);
    r.add_flag("X = A^D", equals_drazin);
    r.add_flag("N(A~) in N(A^k)", null_adjoint);
    const double disagree = (commutes == equals_drazin && equals_drazin == null_adjoint) ? 0.0 : 1.0;
    r.add_residual("commutation equivalence", disagree, disagree);

    // X = 0 exactly when A is nilpotent
    const bool nilpotent = rank_ak == 0;
    const bool x_zero = is_zero(X, eq * std::max(1.0, spectral_norm(c.AD) * a_norm * spectral_norm(c.Am)));
    r.add_flag("nilpotent", nilpotent);
    const double zero_mismatch = nilpotent == x_zero ? 0.0 : 1.0;
    r.add_residual("X = 0 iff A nilpotent", zero_mismatch, zero_mismatch);
    if (nilpotent)
        r.add("X = 0", X, Matrix::Zero(n, n));

    const bool nonsingular = numeric_rank(A, tol) == n;
    r.add_flag("nonsingular", nonsingular);
    if (nonsingular)
        r.add("X = A^-1", X, guarded_inverse(A, tol, ErrorCode::NearSingularFactor, "A"));
    return r;
}

} // namespace mdmp
