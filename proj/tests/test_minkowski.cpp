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

#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace mdmp;

namespace {

const Tolerances kTol;

double residual(const Matrix& lhs, const Matrix& rhs)
{
    return (lhs - rhs).norm() / std::max(rhs.norm(), 1.0);
}

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

TEST(Existence, LightConeRowsHaveNoInverse)
{
    // both rows (1, 0) are lightlike after the metric, A~A = 0
    const Matrix A = oracle::real_matrix({{1, 0}, {1, 0}});
    const ExistenceReport r = minkowski_exists(A, kTol);
    EXPECT_FALSE(r.exists);
    EXPECT_EQ(r.rank_A, 1);
    EXPECT_EQ(r.rank_AsA, 0);
    EXPECT_FALSE(oracle::minkowski_exists(A));
    EXPECT_EQ(code_of([&] { minkowski_inverse(A, kTol); }), ErrorCode::NotExists);
    EXPECT_EQ(code_of([&] { mdmp::mdmp(A, kTol); }), ErrorCode::NotExists);
    try {
        minkowski_inverse(A, kTol);
    } catch (const NotExistsError& e) {
        EXPECT_EQ(e.report().rank_AsA, 0);
    }
}

TEST(Existence, AgreesWithOracleOnRandomLowRank)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix A = oracle::random_matrix(rng, 4, 2) * oracle::random_matrix(rng, 2, 4);
        EXPECT_EQ(minkowski_exists(A, kTol).exists, oracle::minkowski_exists(A));
    }
}

TEST(MinkowskiInverse, WorkedMatrixExact)
{
    Matrix expected = Matrix::Zero(5, 5);
    expected.row(0) << 2, -1, 1, 0, 0;
    expected.row(3) << -1, 1, 0, 0, 0;
    EXPECT_LT(oracle::max_abs_diff(minkowski_inverse(oracle::index2_example(), kTol), expected), 1e-13);
}

TEST(MinkowskiInverse, DefiningSystemAndOuterInverseOracle)
{
    for (const auto& inst : testing_support::instances()) {
        const Matrix& A = inst.A;
        const Matrix X = minkowski_inverse(A, kTol);
        EXPECT_LT(oracle::rel_diff(X, oracle::minkowski(A)), 1e-8);
        EXPECT_LT(residual(A * X * A, A), kTol.eq_rel_tol);
        EXPECT_LT(residual(X * A * X, X), kTol.eq_rel_tol);
        EXPECT_LT(residual(oracle::adjoint(A * X), A * X), kTol.eq_rel_tol);
        EXPECT_LT(residual(oracle::adjoint(X * A), X * A), kTol.eq_rel_tol);
        EXPECT_LT(oracle::rel_diff(minkowski_inverse_hs(hs_decompose(A, kTol), kTol), X), kTol.eq_rel_tol);
    }
}

TEST(Mdmp, WorkedMatrixExact)
{
    Matrix expected = Matrix::Zero(5, 5);
    expected.row(0) << 2, -1, 1, 0, 0;
    expected.row(1) << 2, -1, 1, 0, 0;
    const Matrix A = oracle::index2_example();
    EXPECT_LT(oracle::max_abs_diff(mdmp::mdmp(A, kTol), expected), 1e-13);
    Matrix dual = Matrix::Zero(5, 5);
    dual(0, 0) = 1.0;
    EXPECT_LT(oracle::max_abs_diff(dual_mdmp(A, kTol), dual), 1e-13);
}

TEST(Mdmp, DefiningSystemRankAndOracle)
{
    for (const auto& inst : testing_support::instances()) {
        const Matrix& A = inst.A;
        const Matrix X = mdmp::mdmp(A, kTol);
        const Matrix Ak = oracle::power(A, int(inst.index));
        const Matrix Am = oracle::minkowski(A);
        EXPECT_LT(oracle::rel_diff(X, oracle::mdmp(A)), 1e-8);
        EXPECT_LT(residual(X * A * X, X), kTol.eq_rel_tol);
        EXPECT_LT(residual(X * A, oracle::drazin(A) * A), 1e-8);
        EXPECT_LT(residual(Ak * X, Ak * Am), 1e-8);
        EXPECT_EQ(oracle::rank(X), oracle::rank(Ak));
    }
}

TEST(Mdmp, RoutesAgree)
{
    for (const auto& inst : testing_support::instances()) {
        const Matrix& A = inst.A;
        const Matrix X = mdmp::mdmp(A, kTol);
        const HSDecomposition dec = hs_decompose(A, kTol);
        const HsMdmpForms forms = mdmp_hs(dec, metric_partition(dec), kTol);
        const auto [left, right] = mdmp_composite(A, kTol);
        const double bound = 10 * kTol.eq_rel_tol;
        EXPECT_LT(oracle::rel_diff(forms.metric_form, X), bound);
        EXPECT_LT(oracle::rel_diff(forms.partition_form, X), bound);
        EXPECT_LT(oracle::rel_diff(mdmp_fullrank(A, kTol), X), bound);
        EXPECT_LT(oracle::rel_diff(left, X), bound);
        EXPECT_LT(oracle::rel_diff(right, X), bound);
    }
}

TEST(Mdmp, NilpotentGivesZeroNonsingularGivesInverse)
{
    const Tolerances tol;
    for (std::uint64_t s = 0; s < 6; ++s) {
        const Matrix N = generate_instance(100 + s, 4, 1 + Index(s % 3), tol, Structure::Nilpotent).A;
        EXPECT_LT(mdmp::mdmp(N, tol).norm(), 1e-12);
        EXPECT_EQ(code_of([&] { mdmp_fullrank(N, tol); }), ErrorCode::ZeroPower);
        const Matrix A = generate_instance(200 + s, 4, 0, tol, Structure::Nonsingular).A;
        EXPECT_LT(oracle::rel_diff(mdmp::mdmp(A, tol), A.inverse()), 1e-10);
    }
}

TEST(Mdmp, ProjectorsAreIdempotent)
{
    for (const auto& inst : testing_support::instances()) {
        const Matrix P = projector_AAdm(inst.A, kTol);
        const Matrix Q = projector_AdmA(inst.A, kTol);
        EXPECT_LT(residual(P * P, P), kTol.eq_rel_tol);
        EXPECT_LT(residual(Q * Q, Q), kTol.eq_rel_tol);
    }
}

TEST(DualMdmp, CompositionAndHsRoute)
{
    for (const auto& inst : testing_support::instances()) {
        const Matrix& A = inst.A;
        const Matrix expected = oracle::minkowski(A) * A * oracle::drazin(A);
        EXPECT_LT(oracle::rel_diff(dual_mdmp(A, kTol), expected), 1e-8);
        EXPECT_LT(oracle::rel_diff(dual_mdmp_hs(hs_decompose(A, kTol), kTol), expected), 1e-8);
    }
}

TEST(MCore, IndexOneEqualsMdmpAndHigherIndexRefused)
{
    for (const auto& inst : testing_support::instances()) {
        if (inst.index == 1)
            EXPECT_LT(oracle::rel_diff(m_core(inst.A, kTol), mdmp::mdmp(inst.A, kTol)), 1e-12);
        else
            EXPECT_EQ(code_of([&] { m_core(inst.A, kTol); }), ErrorCode::IndexTooLarge);
    }
}

} // namespace
