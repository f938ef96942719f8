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

#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace mdmp;

namespace {

const Tolerances kTol;

double residual(const Matrix& lhs, const Matrix& rhs)
{
    return (lhs - rhs).norm() / std::max(rhs.norm(), 1.0);
}

TEST(MoorePenrose, WorkedMatrixExact)
{
    // hand-derived: A^+ has rows (2,1,-1,0,0)/3, 0, 0, (-1,1,2,0,0)/3, 0
    Matrix expected = Matrix::Zero(5, 5);
    expected.row(0) << 2.0 / 3, 1.0 / 3, -1.0 / 3, 0, 0;
    expected.row(3) << -1.0 / 3, 1.0 / 3, 2.0 / 3, 0, 0;
    EXPECT_LT(oracle::max_abs_diff(moore_penrose(oracle::index2_example(), kTol), expected), 1e-14);
}

TEST(MoorePenrose, PenroseEquationsAndOracle)
{
    std::mt19937_64 rng(11);
    for (Index n = 2; n <= 7; ++n) {
        const Matrix A = oracle::random_matrix(rng, n, n - 1) * oracle::random_matrix(rng, n - 1, n + 1);
        const Matrix X = moore_penrose(A, kTol);
        EXPECT_LT(oracle::rel_diff(X, oracle::pinv(A)), 1e-10);
        EXPECT_LT(residual(A * X * A, A), kTol.eq_rel_tol);
        EXPECT_LT(residual(X * A * X, X), kTol.eq_rel_tol);
        EXPECT_LT(residual((A * X).adjoint(), A * X), kTol.eq_rel_tol);
        EXPECT_LT(residual((X * A).adjoint(), X * A), kTol.eq_rel_tol);
    }
}

TEST(MoorePenrose, ZeroMatrixGivesZero)
{
    EXPECT_EQ(moore_penrose(Matrix::Zero(2, 3), kTol), Matrix::Zero(3, 2));
}

TEST(Drazin, WorkedMatrixExact)
{
    Matrix expected = Matrix::Zero(5, 5);
    expected(0, 0) = 1.0;
    expected(1, 0) = 1.0;
    EXPECT_LT(oracle::max_abs_diff(drazin(oracle::index2_example(), kTol), expected), 1e-13);
}

TEST(Drazin, DefiningSystemAndOracleOnInstances)
{
    for (const auto& inst : testing_support::instances()) {
        const Matrix& A = inst.A;
        const Matrix X = drazin(A, kTol);
        const Matrix Ak = oracle::power(A, int(inst.index));
        EXPECT_LT(oracle::rel_diff(X, oracle::drazin(A)), 1e-8);
        EXPECT_LT(residual(X * A * X, X), kTol.eq_rel_tol);
        EXPECT_LT(residual(A * X, X * A), kTol.eq_rel_tol);
        EXPECT_LT(residual(Ak * A * X, Ak), kTol.eq_rel_tol);
        EXPECT_LT(oracle::rel_diff(drazin_hs(hs_decompose(A, kTol), kTol), X), kTol.eq_rel_tol);
    }
}

TEST(Drazin, NilpotentAndNonsingularCases)
{
    Matrix N = Matrix::Zero(3, 3);
    N(0, 1) = 2.0;
    N(1, 2) = 3.0;
    EXPECT_EQ(drazin(N, kTol), Matrix::Zero(3, 3));
    std::mt19937_64 rng(12);
    const Matrix A = oracle::random_matrix(rng, 4, 4);
    EXPECT_LT(oracle::rel_diff(drazin(A, kTol), A.inverse()), 1e-12);
}

TEST(GroupInverse, IndexOneOnlyAndDrazinThere)
{
    try {
        group_inverse(oracle::index2_example(), kTol);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IndexTooLarge);
    }
    for (const auto& inst : testing_support::instances())
        if (inst.index == 1) {
            const Matrix X = group_inverse(inst.A, kTol);
            EXPECT_LT(residual(inst.A * X * inst.A, inst.A), kTol.eq_rel_tol);
        }
}

TEST(Dmp, CompositionalDefinition)
{
    for (const auto& inst : testing_support::instances()) {
        const Matrix& A = inst.A;
        EXPECT_LT(oracle::rel_diff(dmp(A, kTol), drazin(A, kTol) * A * moore_penrose(A, kTol)), 1e-14);
    }
}

TEST(Dmp, ProjectedDrazinIdentity)
{
    // A^{D,+} = AA^+ (I - (I - A) AA^+)^D
    for (const auto& inst : testing_support::instances()) {
        const Matrix& A = inst.A;
        const Index n = A.rows();
        const Matrix P = A * moore_penrose(A, kTol);
        const Matrix I = Matrix::Identity(n, n);
        const Matrix rhs = P * oracle::drazin(I - (I - A) * P);
        EXPECT_LT(oracle::rel_diff(dmp(A, kTol), rhs), 1e-7) << "seed " << inst.seed;
    }
}

TEST(Kinds, NamesRoundTrip)
{
    for (const auto k : {GinvKind::MoorePenrose, GinvKind::Drazin, GinvKind::Group, GinvKind::DMP,
                         GinvKind::Minkowski, GinvKind::MDMP, GinvKind::DualMDMP, GinvKind::MCore}) {
        const auto parsed = parse_kind(kind_name(k));
        ASSERT_TRUE(parsed.has_value());
        EXPECT_EQ(*parsed, k);
    }
    EXPECT_FALSE(parse_kind("inverse-of-nothing").has_value());
}

} // namespace
