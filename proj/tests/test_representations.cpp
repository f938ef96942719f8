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

#include "mdmp/minkowski.hpp"
#include "mdmp/representations.hpp"

#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace mdmp;

namespace {

const Tolerances kTol;

constexpr LimitFormula kFormulas[] = {LimitFormula::LeftResolvent, LimitFormula::RightResolvent,
                                      LimitFormula::PowerResolvent, LimitFormula::AdjointResolvent};

// Rows 1 and 2 equal (a, b, c, 0, 0); the remaining rows vanish.
Matrix two_rows(double a, double b, double c)
{
    Matrix M = Matrix::Zero(5, 5);
    for (Index i = 0; i < 2; ++i) {
        M(i, 0) = a;
        M(i, 1) = b;
        M(i, 2) = c;
    }
    return M;
}

TEST(Resolvent, ClosedFormsOnWorkedMatrix)
{
    const Matrix A = oracle::index2_example();
    for (const double lambda : {1e-1, 1e-3, 1e-6}) {
        const double s = lambda + 1.0;
        const Matrix plain = two_rows(2 / s, -1 / s, 1 / s);
        const Matrix adjoint = two_rows((lambda + 2) / (s * s * s), -1 / (s * s), 1 / (s * s * s));
        for (const auto f : kFormulas) {
            const Matrix& expected = f == LimitFormula::AdjointResolvent ? adjoint : plain;
            EXPECT_LT(oracle::max_abs_diff(mdmp_limit_at(A, f, lambda, kTol), expected), 1e-12)
                << formula_name(f) << " at " << lambda;
        }
    }
}

TEST(Resolvent, SchedulesConvergeToMdmpOnInstances)
{
    const LimitSchedule schedule;
    int converged = 0;
    for (const auto& inst : testing_support::instances()) {
        const Matrix X = mdmp::mdmp(inst.A, kTol);
        for (const auto f : kFormulas) {
            try {
                const LimitResult r = mdmp_limit(inst.A, f, schedule, kTol);
                ASSERT_TRUE(r.converged);
                ++converged;
                EXPECT_LE((r.value - X).norm(), 10 * schedule.conv_tol * X.norm() + 1e-12)
                    << formula_name(f) << " seed " << inst.seed;
                EXPECT_EQ(r.lambdas_used.size(), r.residual_trace.size() + 1);
            } catch (const NoConvergenceError&) {
                // allowed: ill-conditioned shifts; the criterion only covers converged runs
            }
        }
    }
    EXPECT_GT(converged, 0);
}

TEST(Resolvent, ExhaustedScheduleCarriesPartialResult)
{
    LimitSchedule s;
    s.max_steps = 2;
    s.conv_tol = 1e-30;
    try {
        mdmp_limit(oracle::index2_example(), LimitFormula::LeftResolvent, s, kTol);
        FAIL();
    } catch (const NoConvergenceError& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoConvergence);
        EXPECT_EQ(e.partial().lambdas_used.size(), 2u);
        EXPECT_FALSE(e.partial().converged);
        EXPECT_EQ(e.partial().value.rows(), 5);
    }
}

TEST(Resolvent, ScheduleValidation)
{
    LimitSchedule s;
    EXPECT_NO_THROW(s.validate());
    s.decay = 1.5;
    EXPECT_THROW(s.validate(), Error);
    s = LimitSchedule{};
    s.max_steps = 1;
    EXPECT_THROW(s.validate(), Error);
    s = LimitSchedule{};
    s.max_steps = 40; // 1e-2 * 0.1^39 is below the floor
    EXPECT_THROW(s.validate(), Error);
    EXPECT_THROW(mdmp_limit_at(oracle::index2_example(), LimitFormula::LeftResolvent, 0.0, kTol), Error);
}

TEST(Resolvent, FormulaNamesRoundTrip)
{
    for (const auto f : kFormulas)
        EXPECT_EQ(parse_formula(formula_name(f)), f);
    EXPECT_FALSE(parse_formula("nonsense").has_value());
}

TEST(Resolvent, MinkowskiLimitMatchesInverse)
{
    const Matrix A = oracle::index2_example();
    const LimitResult r = minkowski_limit(A, LimitSchedule{}, kTol);
    EXPECT_LT(oracle::max_abs_diff(r.value, oracle::minkowski(A)), 1e-6);
}

TEST(Quadrature, DiagonalDecayIntegratesToInverse)
{
    // int_0^inf exp(-Mt) dt = M^-1 for M with positive spectrum
    Matrix M = Matrix::Zero(3, 3);
    M(0, 0) = 1.0;
    M(1, 1) = 2.5;
    M(2, 2) = 0.3;
    M(0, 2) = 0.7;
    const ExponentialIntegral r = integrate_decaying_exponential(M, QuadratureConfig{});
    EXPECT_LT(oracle::rel_diff(r.value, M.inverse()), 1e-10);
    EXPECT_NEAR(r.t_max, 40 / 0.3, 1e-9);
}

TEST(Quadrature, UnstableSpectrumRefused)
{
    Matrix M = Matrix::Identity(2, 2);
    M(1, 1) = -1.0;
    try {
        integrate_decaying_exponential(M, QuadratureConfig{});
        FAIL();
    } catch (const SpectrumNotStableError& e) {
        EXPECT_EQ(e.code(), ErrorCode::SpectrumNotStable);
        EXPECT_NEAR(e.spectrum().real().minCoeff(), -1.0, 1e-12);
    }
    QuadratureConfig bad;
    bad.panels = 4;
    EXPECT_THROW(bad.validate(), Error);
}

TEST(Integral, WorkedMatrixViolatesSpectralCondition)
{
    // B1~B1 has the defective double eigenvalue -1 for this A; rounding
    // splits it by about sqrt(eps)
    try {
        mdmp_integral(oracle::index2_example(), QuadratureConfig{}, kTol);
        FAIL();
    } catch (const SpectrumNotStableError& e) {
        EXPECT_NEAR(e.spectrum().real().maxCoeff(), -1.0, 1e-6);
    }
}

TEST(Integral, TimelikeRankOneMatchesMdmp)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const Index n = 3 + trial % 4;
        Matrix u = oracle::random_matrix(rng, n, 1);
        u(0, 0) = 3.0 * u.norm();
        const Matrix A = u * oracle::random_matrix(rng, n, 1).adjoint();
        const IntegralResult r = mdmp_integral(A, QuadratureConfig{}, kTol);
        EXPECT_LT(oracle::rel_diff(r.value, oracle::mdmp(A)), 1e-6);
        EXPECT_LT(oracle::rel_diff(r.value, r.closed_form), 1e-6);
        EXPECT_GT(r.spectrum.real().minCoeff(), 0.0);
    }
}

TEST(Integral, GuardNeverReturnsWrongAnswer)
{
    for (const auto& inst : testing_support::instances()) {
        try {
            const IntegralResult r = mdmp_integral(inst.A, QuadratureConfig{}, kTol);
            EXPECT_LT(oracle::rel_diff(r.value, oracle::mdmp(inst.A)), 1e-6);
        } catch (const SpectrumNotStableError& e) {
            EXPECT_LE(e.spectrum().real().minCoeff(), QuadratureConfig{}.spectral_margin);
        }
    }
}

TEST(Integral, NilpotentHasNoRepresentation)
{
    Matrix N = Matrix::Zero(3, 3);
    N(0, 1) = 1.0;
    try {
        mdmp_integral(N, QuadratureConfig{}, kTol);
        FAIL();
    } catch (const Error& e) {
        EXPECT_TRUE(e.code() == ErrorCode::ZeroPower || e.code() == ErrorCode::NotExists);
    }
}

} // namespace
