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

#include "mdmp/core.hpp"

#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace mdmp;

namespace {

const Tolerances kTol;

Matrix jordan_nilpotent(Index n)
{
    Matrix J = Matrix::Zero(n, n);
    for (Index i = 0; i + 1 < n; ++i)
        J(i, i + 1) = 1.0;
    return J;
}

TEST(Metric, SignatureAndInvolution)
{
    const Matrix G = minkowski_metric(4);
    EXPECT_EQ(G(0, 0), Complex(1.0));
    for (Index i = 1; i < 4; ++i)
        EXPECT_EQ(G(i, i), Complex(-1.0));
    EXPECT_EQ(G * G, Matrix::Identity(4, 4));
    EXPECT_THROW(minkowski_metric(0), Error);
}

TEST(Adjoint, MatchesExplicitMetricProduct)
{
    std::mt19937_64 rng(1);
    for (Index m = 1; m <= 5; ++m)
        for (Index n = 1; n <= 5; ++n) {
            const Matrix A = oracle::random_matrix(rng, m, n);
            EXPECT_LT(oracle::rel_diff(minkowski_adjoint(A), oracle::adjoint(A)), 1e-15) << m << "x" << n;
        }
}

TEST(Adjoint, InvolutionAndReversedProducts)
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix A = oracle::random_matrix(rng, 4, 3);
        const Matrix B = oracle::random_matrix(rng, 3, 5);
        EXPECT_LT(oracle::rel_diff(minkowski_adjoint(minkowski_adjoint(A)), A), 1e-15);
        EXPECT_LT(oracle::rel_diff(minkowski_adjoint(A * B), minkowski_adjoint(B) * minkowski_adjoint(A)), 1e-14);
    }
}

TEST(Tolerances, RejectsOutOfRangeFields)
{
    Tolerances t;
    EXPECT_NO_THROW(t.validate());
    t.rank_rel_tol = 1.0;
    EXPECT_THROW(t.validate(), Error);
    t = Tolerances{};
    t.eq_rel_tol = 0.0;
    EXPECT_THROW(t.validate(), Error);
    t = Tolerances{};
    t.cond_max = -1.0;
    EXPECT_THROW(t.validate(), Error);
}

TEST(Validation, NonFiniteEntriesRejected)
{
    Matrix A = Matrix::Identity(2, 2);
    A(1, 0) = std::numeric_limits<double>::quiet_NaN();
    try {
        numeric_rank(A, kTol);
        FAIL() << "expected InvalidArgument";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
    }
}

TEST(NumericRank, AgreesWithPivotedQrOnConstructedRanks)
{
    std::mt19937_64 rng(3);
    for (Index n = 2; n <= 8; ++n)
        for (Index r = 0; r <= n; ++r) {
            const Matrix A = oracle::random_matrix(rng, n, r) * oracle::random_matrix(rng, r, n);
            EXPECT_EQ(numeric_rank(A, kTol), r);
            EXPECT_EQ(numeric_rank(A, kTol), oracle::rank(A));
        }
}

TEST(NumericRank, ZeroMatrixHasRankZero)
{
    EXPECT_EQ(numeric_rank(Matrix::Zero(3, 4), kTol), 0);
}

TEST(Bases, RangeAndNullAreComplementary)
{
    std::mt19937_64 rng(4);
    const Matrix A = oracle::random_matrix(rng, 6, 2) * oracle::random_matrix(rng, 2, 6);
    const Matrix R = range_basis(A, kTol);
    const Matrix N = null_basis(A, kTol);
    ASSERT_EQ(R.cols(), 2);
    ASSERT_EQ(N.cols(), 4);
    EXPECT_LT((A * N).norm(), 1e-12 * A.norm());
    // projecting A's columns onto R(A) loses nothing
    EXPECT_LT((A - R * R.adjoint() * A).norm(), 1e-12 * A.norm());
}

TEST(MatrixIndex, HandExamples)
{
    EXPECT_EQ(matrix_index(Matrix::Identity(3, 3), kTol), 0);
    EXPECT_EQ(matrix_index(oracle::index2_example(), kTol), 2);
    for (Index n = 1; n <= 6; ++n)
        EXPECT_EQ(matrix_index(jordan_nilpotent(n), kTol), n) << "Jordan block of order " << n;
}

TEST(MatrixIndex, MinimalStabilizingPowerOnInstances)
{
    for (const auto& inst : testing_support::instances()) {
        const Index k = matrix_index(inst.A, kTol);
        EXPECT_EQ(k, inst.index);
        EXPECT_EQ(k, oracle::index(inst.A));
        EXPECT_EQ(oracle::rank(oracle::power(inst.A, int(k))), oracle::rank(oracle::power(inst.A, int(k) + 1)));
        if (k > 0)
            EXPECT_GT(oracle::rank(oracle::power(inst.A, int(k) - 1)), oracle::rank(oracle::power(inst.A, int(k))));
    }
}

TEST(HsDecomposition, WorkedMatrixInvariants)
{
    const Matrix A = oracle::index2_example();
    const HSDecomposition dec = hs_decompose(A, kTol);
    ASSERT_EQ(dec.rank, 2);
    EXPECT_NEAR(dec.sigma(0), std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(dec.sigma(1), 1.0, 1e-12);
    EXPECT_LT(oracle::rel_diff(dec.reconstruct(), A), 1e-14);
}

TEST(HsDecomposition, InvariantsOnInstances)
{
    for (const auto& inst : testing_support::instances()) {
        const HSDecomposition dec = hs_decompose(inst.A, kTol);
        const Index n = dec.order(), r = dec.rank;
        EXPECT_LT((dec.U.adjoint() * dec.U - Matrix::Identity(n, n)).norm(), kTol.eq_rel_tol);
        EXPECT_LT((dec.K * dec.K.adjoint() + dec.L * dec.L.adjoint() - Matrix::Identity(r, r)).norm(),
                  kTol.eq_rel_tol);
        EXPECT_LT(oracle::rel_diff(dec.reconstruct(), inst.A), kTol.eq_rel_tol);
        for (Index i = 1; i < r; ++i)
            EXPECT_GE(dec.sigma(i - 1), dec.sigma(i));
    }
}

TEST(HsDecomposition, ZeroMatrixRejected)
{
    try {
        hs_decompose(Matrix::Zero(3, 3), kTol);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroMatrix);
    }
}

TEST(MetricPartition, HermitianBlocksReassembleMetric)
{
    for (const auto& inst : testing_support::instances()) {
        const HSDecomposition dec = hs_decompose(inst.A, kTol);
        const MetricPartition p = metric_partition(dec);
        EXPECT_LT((p.G1 - p.G1.adjoint()).norm(), kTol.eq_rel_tol);
        EXPECT_LT((p.G4 - p.G4.adjoint()).norm(), kTol.eq_rel_tol);
        EXPECT_LT(oracle::rel_diff(p.assemble(dec.U), oracle::metric(dec.order())), kTol.eq_rel_tol);
    }
}

TEST(FullRankChain, ResidualsRanksAndLength)
{
    for (const auto& inst : testing_support::instances()) {
        const FullRankChain chain = full_rank_chain(inst.A, kTol);
        ASSERT_EQ(chain.length(), inst.index);
        EXPECT_LT(oracle::rel_diff(chain.B[0] * chain.C[0], inst.A), kTol.eq_rel_tol);
        for (Index i = 0; i < chain.length(); ++i) {
            EXPECT_EQ(oracle::rank(chain.B[i]), chain.B[i].cols());
            EXPECT_EQ(oracle::rank(chain.C[i]), chain.C[i].rows());
            if (i + 1 < chain.length())
                EXPECT_LT(oracle::rel_diff(chain.B[i + 1] * chain.C[i + 1], chain.C[i] * chain.B[i]), kTol.eq_rel_tol);
        }
    }
}

TEST(FullRankChain, NilpotentTerminates)
{
    try {
        full_rank_chain(jordan_nilpotent(3), kTol);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NilpotentTermination);
    }
}

TEST(FullRankChain, LargeNilpotentCouplingKeepsCore)
{
    // ||A|| is dominated by the nilpotent coupling; the core must survive.
    Matrix A = Matrix::Zero(3, 3);
    A(0, 0) = 1.0;
    A(1, 2) = 1e4;
    const FullRankChain chain = full_rank_chain(A, kTol);
    EXPECT_EQ(chain.length(), 2);
    EXPECT_EQ(chain.C.back().rows(), 1);
}

TEST(GuardedInverse, ReportsRequestedCode)
{
    Matrix S = Matrix::Identity(2, 2);
    S(1, 1) = 1e-14;
    try {
        guarded_inverse(S, kTol, ErrorCode::SingularG1, "S");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularG1);
    }
}

} // namespace
