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

#include <gtest/gtest.h>

#include "mdmp/classical.hpp"
#include "mdmp/minkowski.hpp"
#include "mdmp/solvers.hpp"

#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace mdmp;

namespace {

const Tolerances kTol;

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidArgument;
}

Vector printed_b()
{
    Vector b(5);
    b << 0.15735, 0.15735, 0.1415, -0.1, -0.2;
    return b;
}

// b = G U (G1 y; b2) with y in R((Sigma K)^D): the shape the minimum formula covers.
Vector admissible_rhs(const Matrix& A, std::mt19937_64& rng, double b2_scale)
{
    const HSDecomposition dec = hs_decompose(A, kTol);
    const MetricPartition part = metric_partition(dec);
    const Index n = dec.order(), r = dec.rank;
    const Matrix y = drazin(dec.sigma_k(), kTol) * oracle::random_matrix(rng, r, 1);
    Vector stacked(n);
    stacked.head(r) = part.G1 * y;
    stacked.tail(n - r) = b2_scale * oracle::random_matrix(rng, n - r, 1);
    return oracle::metric(n) * dec.U * stacked;
}

TEST(Projected, WorkedSystem)
{
    const SolveResult s = solve_projected(oracle::index2_example(), printed_b(), std::nullopt, kTol);
    Vector x(5);
    x << 0.29885, 0.29885, 0, 0, 0;
    EXPECT_LT(oracle::max_abs_diff(s.particular, x), 1e-12);
    EXPECT_TRUE(s.unique_on_range_ak);
    EXPECT_FALSE(s.general.has_value());
}

TEST(Projected, ZeroRightHandSide)
{
    const SolveResult s = solve_projected(oracle::index2_example(), Vector::Zero(5), std::nullopt, kTol);
    EXPECT_EQ(s.particular.norm(), 0.0);
}

TEST(Projected, GeneralSolutionsSolveTheSystem)
{
    std::mt19937_64 rng(41);
    for (const auto& inst : testing_support::instances()) {
        const Matrix& A = inst.A;
        const Index n = A.rows();
        const Vector b = oracle::random_matrix(rng, n, 1);
        const Vector v = oracle::random_matrix(rng, n, 1);
        const SolveResult s = solve_projected(A, b, v, kTol);
        const Matrix Ak = oracle::power(A, int(inst.index));
        const Matrix rhs = Ak * oracle::minkowski(A) * b;
        ASSERT_TRUE(s.general.has_value());
        EXPECT_LT((Ak * *s.general - rhs).norm() / std::max(rhs.norm(), 1.0), 1e-8);
        EXPECT_LT((Ak * s.particular - rhs).norm() / std::max(rhs.norm(), 1.0), 1e-8);
        const Matrix P = s.homogeneous_projector;
        EXPECT_LT((P * P - P).norm() / std::max(P.norm(), 1.0), kTol.eq_rel_tol);
        // particular lies in R(A^k)
        Matrix augmented(n, n + 1);
        augmented << Ak, s.particular;
        EXPECT_EQ(oracle::rank(augmented), oracle::rank(Ak));
    }
}

TEST(Projected, NullSpaceShiftKeepsResidual)
{
    std::mt19937_64 rng(42);
    for (const auto& inst : testing_support::instances()) {
        const Matrix& A = inst.A;
        const Matrix Ak = oracle::power(A, int(inst.index));
        const Eigen::FullPivLU<Matrix> lu(Ak);
        const Matrix kernel = lu.kernel();
        const Vector v = kernel * oracle::random_matrix(rng, kernel.cols(), 1);
        const Vector b = oracle::random_matrix(rng, A.rows(), 1);
        const SolveResult s = solve_projected(A, b, v, kTol);
        EXPECT_NEAR(s.general_residual, s.residual, 1e-8 * std::max(1.0, b.norm()));
    }
}

TEST(LeastNorm, WorkedSystem)
{
    const MinResult r = least_norm_min(oracle::index2_example(), printed_b(), kTol);
    EXPECT_NEAR(r.min_value, 0.24495, 1e-4);
    EXPECT_NEAR(r.objective, r.min_value, 1e-8);
    EXPECT_TRUE(r.condition_ok);
    EXPECT_NEAR(std::abs(r.x(0)), 0.29885, 1e-12);
}

TEST(LeastNorm, MinimumIsAttainedAndMinimal)
{
    std::mt19937_64 rng(43);
    for (const auto& inst : testing_support::instances()) {
        const Matrix& A = inst.A;
        const Vector b = admissible_rhs(A, rng, 1.0);
        const MinResult r = least_norm_min(A, b, kTol);
        EXPECT_TRUE(r.condition_ok);
        EXPECT_NEAR(r.min_value, r.b2.norm(), 1e-12);
        EXPECT_NEAR(r.objective, r.min_value, 1e-8 * std::max(1.0, b.norm()));
        // 20 random points of R(A^k) never beat the minimum
        const Matrix Ak = oracle::power(A, int(inst.index));
        const Matrix M = oracle::adjoint(A * oracle::pinv(A)) * A;
        for (int probe = 0; probe < 20; ++probe) {
            const Vector y = Ak * oracle::random_matrix(rng, A.rows(), 1);
            EXPECT_GE((M * y - b).norm(), r.min_value - kTol.eq_rel_tol);
        }
    }
}

TEST(LeastNorm, ExactSolutionWhenTailVanishes)
{
    std::mt19937_64 rng(44);
    const Matrix& A = testing_support::instances().front().A;
    const MinResult r = least_norm_min(A, admissible_rhs(A, rng, 0.0), kTol);
    EXPECT_LT(r.min_value, 1e-12);
    EXPECT_LT(r.objective, 1e-10);
}

TEST(LeastNorm, Homogeneous)
{
    const Matrix A = oracle::index2_example();
    const MinResult one = least_norm_min(A, printed_b(), kTol);
    const MinResult three = least_norm_min(A, 3.0 * printed_b(), kTol);
    EXPECT_NEAR(three.min_value, 3.0 * one.min_value, 1e-12);
    EXPECT_LT(oracle::max_abs_diff(three.x, 3.0 * one.x), 1e-12);
}

TEST(LeastNorm, RefusesOutsideHypotheses)
{
    std::mt19937_64 rng(45);
    EXPECT_EQ(code_of([&] { least_norm_min(Matrix::Identity(3, 3), Vector::Ones(3), kTol); }), ErrorCode::FullRank);
    // a generic b breaks the membership condition whenever (Sigma K)^D is singular
    for (const auto& inst : testing_support::instances()) {
        const HSDecomposition dec = hs_decompose(inst.A, kTol);
        if (oracle::rank(oracle::drazin(dec.sigma_k())) == dec.rank)
            continue;
        const Vector b = oracle::random_matrix(rng, inst.A.rows(), 1);
        EXPECT_EQ(code_of([&] { least_norm_min(inst.A, b, kTol); }), ErrorCode::ConditionFailed);
        break;
    }
}

TEST(ComplementBases, AutoBasesSatisfyConditions)
{
    for (const auto& inst : testing_support::instances()) {
        const ComplementBases cb = build_complement_bases(inst.A, kTol);
        const Matrix Ak = oracle::power(inst.A, int(inst.index));
        EXPECT_LT((Ak * cb.V).norm(), 1e-10 * Ak.norm());
        EXPECT_LT((cb.W * Ak).norm(), 1e-10 * Ak.norm());
        EXPECT_LT((cb.W * cb.V - Matrix::Identity(cb.V.cols(), cb.V.cols())).norm(), 1e-12);
        EXPECT_NO_THROW(validate_complement_bases(inst.A, cb, kTol));
        const Matrix E = complement_projector(cb, kTol);
        EXPECT_LT((E * E - E).norm(), kTol.eq_rel_tol);
        EXPECT_EQ(oracle::rank(E), Ak.cols() - oracle::rank(Ak));
    }
}

TEST(ComplementBases, NilpotentJordanBlockSpansEverything)
{
    Matrix J = Matrix::Zero(2, 2);
    J(0, 1) = 1.0;
    const ComplementBases cb = build_complement_bases(J, kTol);
    EXPECT_EQ(cb.t, 0);
    EXPECT_EQ(cb.V.cols(), 2);
    EXPECT_LT((complement_projector(cb, kTol) - Matrix::Identity(2, 2)).norm(), 1e-14);
}

TEST(ComplementBases, InvalidChoicesRejected)
{
    const Matrix A = oracle::index2_example();
    EXPECT_EQ(code_of([&] { build_complement_bases(Matrix::Identity(3, 3), kTol); }), ErrorCode::FullRank);
    ComplementBases cb = build_complement_bases(A, kTol);
    cb.V.col(0) = A.col(0); // leaves N(A^2)
    EXPECT_THROW(validate_complement_bases(A, cb, kTol), Error);
}

TEST(Cramer, WorkedSystemBothBases)
{
    const Matrix A = oracle::index2_example();
    Matrix V = Matrix::Zero(5, 4), W = Matrix::Zero(4, 5);
    V.bottomRows(4) = Matrix::Identity(4, 4);
    W(0, 2) = W(1, 3) = W(2, 4) = 1.0;
    W(3, 0) = -1.0;
    W(3, 1) = 1.0;
    Vector x(5);
    x << 0.29885, 0.29885, 0, 0, 0;
    EXPECT_LT(oracle::max_abs_diff(cramer_solve(A, printed_b(), ComplementBases{V, W, 1}, kTol), x), 1e-12);
    EXPECT_LT(oracle::max_abs_diff(cramer_solve(A, printed_b(), std::nullopt, kTol), x), 1e-12);
    EXPECT_EQ(cramer_solve(A, Vector::Zero(5), std::nullopt, kTol).norm(), 0.0);
}

TEST(Cramer, MatchesProjectedAcrossBasisChoices)
{
    std::mt19937_64 rng(46);
    for (const auto& inst : testing_support::instances()) {
        const Matrix& A = inst.A;
        const Vector b = oracle::random_matrix(rng, A.rows(), 1);
        const Vector x = solve_projected(A, b, std::nullopt, kTol).particular;
        const double bound = 100 * kTol.eq_rel_tol * std::max(1.0, x.norm());
        EXPECT_LT((cramer_solve(A, b, std::nullopt, kTol) - x).norm(), bound);
        // a second valid pair: V T and S W for invertible T, S
        ComplementBases cb = build_complement_bases(A, kTol);
        const Index d = cb.V.cols();
        const Matrix T = oracle::random_matrix(rng, d, d) + 3.0 * Matrix::Identity(d, d);
        const Matrix S = oracle::random_matrix(rng, d, d) + 3.0 * Matrix::Identity(d, d);
        cb.V = cb.V * T;
        cb.W = S * cb.W;
        EXPECT_LT((cramer_solve(A, b, cb, kTol) - x).norm(), bound);
    }
}

TEST(Cramer, CofactorDeterminantsAgree)
{
    std::mt19937_64 rng(47);
    int checked = 0;
    for (const auto& inst : testing_support::instances()) {
        if (inst.order > 6)
            continue;
        const Matrix& A = inst.A;
        const Index n = A.rows();
        const Vector b = oracle::random_matrix(rng, n, 1);
        const ComplementBases cb = build_complement_bases(A, kTol);
        const Matrix Ak = oracle::power(A, int(inst.index));
        const Matrix E = cb.V * (cb.W * cb.V).inverse() * cb.W;
        const Matrix bordered = Ak + E;
        const Vector rhs = Ak * oracle::minkowski(A) * b;
        const oracle::Complex det = oracle::laplace_det(bordered);
        Vector x(n);
        for (Index i = 0; i < n; ++i) {
            Matrix replaced = bordered;
            replaced.col(i) = rhs;
            x(i) = oracle::laplace_det(replaced) / det;
        }
        EXPECT_LT((cramer_solve(A, b, cb, kTol) - x).norm(), 100 * kTol.eq_rel_tol * std::max(1.0, x.norm()));
        ++checked;
    }
    EXPECT_GT(checked, 10);
}

} // namespace
