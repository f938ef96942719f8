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

#include "mdmp/representations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include <boost/math/quadrature/gauss.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "detail.hpp"
#include "mdmp/minkowski.hpp"

namespace mdmp {

namespace {

using Real = long double;
using LMatrix = detail::CMatrix<Real>;
using LComplex = std::complex<Real>;

constexpr std::array<std::pair<LimitFormula, std::string_view>, 4> kFormulaNames{{
    {LimitFormula::LeftResolvent, "left-resolvent"},
    {LimitFormula::RightResolvent, "right-resolvent"},
    {LimitFormula::PowerResolvent, "power-resolvent"},
    {LimitFormula::AdjointResolvent, "adjoint-resolvent"},
}};

struct SingularShift {
    double lambda;
};

// Operands shared by every lambda step, in extended precision.
struct ResolventOperands {
    Index n = 0;
    LMatrix Ak;       // A^k
    LMatrix Ak1;      // A^(k+1)
    LMatrix Am;       // A^m
    LMatrix As;       // A~
    LMatrix AsA;      // A~ A
    double rcond_min = 0.0;
};

LMatrix extended_minkowski_inverse(const Matrix& A, const Tolerances& tol)
{
    const Index r = numeric_rank(A, tol);
    const LMatrix AL = A.cast<LComplex>();
    if (r == 0)
        return LMatrix::Zero(A.cols(), A.rows());
    return detail::minkowski_from_factor<Real>(detail::svd_factor<Real>(AL, r));
}

ResolventOperands prepare(const Matrix& A, const Tolerances& tol, bool needs_power)
{
    const ExistenceReport report = minkowski_exists(A, tol);
    if (!report.exists)
        throw NotExistsError(report);

    ResolventOperands ops;
    ops.n = A.cols();
    ops.rcond_min = 1.0 / tol.cond_max;
    const LMatrix AL = A.cast<LComplex>();
    ops.As = detail::minkowski_adjoint<Real>(AL);
    ops.AsA = ops.As * AL;
    if (needs_power) {
        const Index k = matrix_index(A, tol);
        ops.Ak = LMatrix::Identity(ops.n, ops.n);
        for (Index i = 0; i < k; ++i)
            ops.Ak = ops.Ak * AL;
        ops.Ak1 = ops.Ak * AL;
        ops.Am = extended_minkowski_inverse(A, tol);
    }
    return ops;
}

Eigen::PartialPivLU<LMatrix> shifted_lu(const LMatrix& M, double lambda, double rcond_min)
{
    LMatrix shifted = M;
    shifted.diagonal().array() += LComplex(static_cast<Real>(lambda), 0);
    Eigen::PartialPivLU<LMatrix> lu(shifted);
    if (!(static_cast<double>(lu.rcond()) >= rcond_min))
        throw SingularShift{lambda};
    return lu;
}

LMatrix evaluate(const ResolventOperands& ops, LimitFormula formula, double lambda)
{
    switch (formula) {
    case LimitFormula::LeftResolvent: {
        const auto lu = shifted_lu(ops.Am * ops.Ak1, lambda, ops.rcond_min);
        return ops.Ak * lu.solve(ops.Am);
    }
    case LimitFormula::RightResolvent: {
        const auto lu = shifted_lu(ops.Ak1 * ops.Am, lambda, ops.rcond_min);
        // X (l I + M) = A^k A^m, solved through the transposed system
        const LMatrix rhs = (ops.Ak * ops.Am).transpose();
        return LMatrix(lu.transpose().solve(rhs)).transpose();
    }
    case LimitFormula::PowerResolvent: {
        const auto lu = shifted_lu(ops.Ak, lambda, ops.rcond_min);
        return lu.solve(ops.Ak * ops.Am);
    }
    case LimitFormula::AdjointResolvent: {
        const auto inner = shifted_lu(ops.AsA, lambda, ops.rcond_min);
        const auto outer = shifted_lu(ops.Ak, lambda, ops.rcond_min);
        return outer.solve(ops.Ak * inner.solve(ops.As));
    }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown limit formula");
}

template <class Step>
LimitResult run_schedule(const LimitSchedule& schedule, Step&& step)
{
    schedule.validate();
    LimitResult result;
    LMatrix previous;
    bool have_previous = false;
    for (int j = 0; j < schedule.max_steps; ++j) {
        const double lambda = schedule.lambda_start * std::pow(schedule.decay, j);
        LMatrix current;
        try {
            current = step(lambda);
        } catch (const SingularShift& s) {
            result.skipped_lambdas.push_back(s.lambda);
            continue;
        }
        result.lambdas_used.push_back(lambda);
        if (have_previous) {
            const double change = static_cast<double>((current - previous).norm());
            const double scale = static_cast<double>(current.norm());
            const double relative = scale > 0.0 ? change / scale : change;
            result.residual_trace.push_back(relative);
            // the last (up to) three recorded changes must not increase
            const auto& trace = result.residual_trace;
            const std::size_t tail = std::min<std::size_t>(3, trace.size());
            const bool settled = std::is_sorted(trace.end() - static_cast<long>(tail), trace.end(),
                                                std::greater_equal<double>());
            if (relative <= schedule.conv_tol && settled) {
                result.value = current.cast<Complex>();
                result.converged = true;
                return result;
            }
        }
        previous = std::move(current);
        have_previous = true;
    }
    if (have_previous)
        result.value = previous.cast<Complex>();
    throw NoConvergenceError(std::move(result));
}

std::pair<Matrix, Matrix> power_sum(const Matrix& P, long count)
{
    // (sum_{j<count} P^j, P^count)
    const Index n = P.rows();
    if (count == 0)
        return {Matrix::Zero(n, n), Matrix::Identity(n, n)};
    if (count % 2 == 1) {
        auto [sum, power] = power_sum(P, count - 1);
        return {Matrix::Identity(n, n) + P * sum, P * power};
    }
    auto [sum, power] = power_sum(P, count / 2);
    return {sum + power * sum, power * power};
}

} // namespace

std::string_view formula_name(LimitFormula formula) noexcept
{
    for (const auto& [f, name] : kFormulaNames)
        if (f == formula)
            return name;
    return "unknown";
}

std::optional<LimitFormula> parse_formula(std::string_view name) noexcept
{
    for (const auto& [f, n] : kFormulaNames)
        if (n == name)
            return f;
    return std::nullopt;
}

void LimitSchedule::validate() const
{
    if (!(lambda_start > 0.0) || !(decay > 0.0 && decay < 1.0) || max_steps < 2 || !(conv_tol > 0.0))
        throw Error(ErrorCode::InvalidArgument,
                    "limit schedule needs lambda_start > 0, decay in (0,1), max_steps >= 2, conv_tol > 0");
    if (!(lambda_start * std::pow(decay, max_steps) > kLambdaFloor))
        throw Error(ErrorCode::InvalidArgument, "limit schedule reaches below the 1e-14 lambda floor");
}

Matrix mdmp_limit_at(const Matrix& A, LimitFormula formula, double lambda, const Tolerances& tol)
{
    require_square(A, "mdmp_limit operand");
    if (!(lambda > 0.0))
        throw Error(ErrorCode::InvalidArgument, "lambda must be positive");
    const ResolventOperands ops = prepare(A, tol, true);
    try {
        return evaluate(ops, formula, lambda).cast<Complex>();
    } catch (const SingularShift&) {
        throw Error(ErrorCode::NearSingularFactor, "shifted system is numerically singular");
    }
}

LimitResult mdmp_limit(const Matrix& A, LimitFormula formula, const LimitSchedule& schedule,
                       const Tolerances& tol)
{
    require_square(A, "mdmp_limit operand");
    const ResolventOperands ops = prepare(A, tol, true);
    return run_schedule(schedule, [&](double lambda) { return evaluate(ops, formula, lambda); });
}

LimitResult minkowski_limit(const Matrix& A, const LimitSchedule& schedule, const Tolerances& tol)
{
    require_valid(A, "minkowski_limit operand");
    const ResolventOperands ops = prepare(A, tol, false);
    return run_schedule(schedule, [&](double lambda) {
        return LMatrix(shifted_lu(ops.AsA, lambda, ops.rcond_min).solve(ops.As));
    });
}

void QuadratureConfig::validate() const
{
    if (panels < 8)
        throw Error(ErrorCode::InvalidArgument, "quadrature needs at least 8 panels");
    if (!(spectral_margin > 0.0))
        throw Error(ErrorCode::InvalidArgument, "spectral margin must be positive");
    if (t_max && !(*t_max > 0.0))
        throw Error(ErrorCode::InvalidArgument, "t_max must be positive");
}

SpectrumNotStableError::SpectrumNotStableError(Vector spectrum)
    : Error(ErrorCode::SpectrumNotStable,
            [&] {
                std::ostringstream msg;
                msg << "exp(-M t) does not decay; eigenvalues of M:";
                for (Index i = 0; i < spectrum.size(); ++i)
                    msg << " (" << spectrum(i).real() << (spectrum(i).imag() < 0 ? "" : "+")
                        << spectrum(i).imag() << "i)";
                return msg.str();
            }()),
      spectrum_(std::move(spectrum))
{
}

ExponentialIntegral integrate_decaying_exponential(const Matrix& M, const QuadratureConfig& config)
{
    require_square(M, "exponential integrand");
    config.validate();

    ExponentialIntegral out;
    out.spectrum = Eigen::ComplexEigenSolver<Matrix>(M, false).eigenvalues();
    double min_re = std::numeric_limits<double>::infinity();
    double radius = 0.0;
    for (Index i = 0; i < out.spectrum.size(); ++i) {
        min_re = std::min(min_re, out.spectrum(i).real());
        radius = std::max(radius, std::abs(out.spectrum(i)));
    }
    if (!(min_re > config.spectral_margin))
        throw SpectrumNotStableError(out.spectrum);

    out.t_max = config.t_max.value_or(40.0 / min_re);
    const double needed = std::ceil(out.t_max * radius / 2.0);
    out.panels = static_cast<long>(std::clamp(needed, static_cast<double>(config.panels), 1e12));
    const double h = out.t_max / static_cast<double>(out.panels);

    // One panel's rule: exp(-M (j h + s)) = exp(-M h)^j exp(-M s).
    using Rule = boost::math::quadrature::gauss<double, 20>;
    const Index n = M.rows();
    Matrix panel = Matrix::Zero(n, n);
    const auto& nodes = Rule::abscissa();
    const auto& weights = Rule::weights();
    for (std::size_t q = 0; q < nodes.size(); ++q) {
        for (const double sign : {-1.0, 1.0}) {
            if (nodes[q] == 0.0 && sign > 0.0)
                continue;
            const double s = 0.5 * h * (1.0 + sign * nodes[q]);
            panel += (0.5 * h * weights[q]) * Matrix((-M * Complex(s, 0.0)).exp());
        }
    }
    const Matrix step = (-M * Complex(h, 0.0)).exp();
    out.value = power_sum(step, out.panels).first * panel;
    return out;
}

IntegralResult mdmp_integral(const Matrix& A, const QuadratureConfig& config, const Tolerances& tol)
{
    require_square(A, "mdmp_integral operand");
    config.validate();
    const ExistenceReport report = minkowski_exists(A, tol);
    if (!report.exists)
        throw NotExistsError(report);

    FullRankChain chain;
    try {
        chain = full_rank_chain(A, tol);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NilpotentTermination || e.code() == ErrorCode::ZeroMatrix)
            throw Error(ErrorCode::ZeroPower, "A^k = 0, the integral representation is undefined");
        throw;
    }
    const Index k = chain.length();
    const Matrix core_inv =
        guarded_inverse(chain.C.back() * chain.B.back(), tol, ErrorCode::NearSingularFactor, "C_k B_k");
    Matrix M = chain.B[0];
    for (Index i = 1; i < k; ++i)
        M = M * chain.B[i];
    for (Index i = 0; i < k; ++i)
        M = M * core_inv;
    for (Index i = k - 1; i >= 1; --i)
        M = M * chain.C[i];

    const Matrix& B1 = chain.B.front();
    const Matrix B1s = minkowski_adjoint(B1);
    const Matrix S = B1s * B1;

    const ExponentialIntegral integral = integrate_decaying_exponential(S, config);
    IntegralResult result;
    result.spectrum = integral.spectrum;
    result.t_max = integral.t_max;
    result.panels = integral.panels;
    result.value = M * integral.value * B1s;
    result.closed_form = M * guarded_inverse(S, tol, ErrorCode::NearSingularFactor, "B1~ B1") * B1s;
    return result;
}

} // namespace mdmp
