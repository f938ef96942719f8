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

#ifndef MDMP_REPRESENTATIONS_HPP
#define MDMP_REPRESENTATIONS_HPP

//
// Limit and integral representations of the m-DMP inverse.
//
// The resolvent limits (lambda -> 0) are
//
//   left-resolvent     A^k (lambda I + A^m A^(k+1))^-1 A^m
//   right-resolvent    A^k A^m (lambda I + A^(k+1) A^m)^-1
//   power-resolvent    (lambda I + A^k)^-1 A^k A^m
//   adjoint-resolvent  (lambda I + A^k)^-1 A^k (lambda I + A~ A)^-1 A~
//
// Each evaluation is a shifted solve whose conditioning grows like 1/lambda,
// so the operands and solves are carried in long double.
//
// The integral representation is
//
//   A^{D,m} = int_0^inf M exp(-B1~ B1 t) B1~ dt,   M = B1...Bk (Ck Bk)^-k Ck...C2
//
// and only converges when every eigenvalue of B1~ B1 has positive real part.
// That is checked before integrating; B1~ B1 is not Hermitian in Minkowski
// space and the condition fails for many inputs.
//

#include <optional>
#include <string_view>
#include <vector>

#include "mdmp/core.hpp"

namespace mdmp {

enum class LimitFormula { LeftResolvent, RightResolvent, PowerResolvent, AdjointResolvent };

std::string_view formula_name(LimitFormula formula) noexcept;
std::optional<LimitFormula> parse_formula(std::string_view name) noexcept;

struct LimitSchedule {
    double lambda_start = 1e-2;
    double decay = 0.1;
    int max_steps = 10;
    double conv_tol = 1e-8;

    static constexpr double kLambdaFloor = 1e-14;

    // lambda_start > 0, decay in (0,1), max_steps >= 2, conv_tol > 0 and
    // lambda_start * decay^max_steps above kLambdaFloor
    void validate() const;
};

struct LimitResult {
    Matrix value;
    std::vector<double> lambdas_used;
    std::vector<double> residual_trace;  // relative change between consecutive accepted steps
    std::vector<double> skipped_lambdas; // shifted system numerically singular
    bool converged = false;
};

class NoConvergenceError : public Error {
public:
    explicit NoConvergenceError(LimitResult partial)
        : Error(ErrorCode::NoConvergence, "limit schedule exhausted without convergence"),
          partial_(std::move(partial)) {}

    const LimitResult& partial() const noexcept { return partial_; }

private:
    LimitResult partial_;
};

// One evaluation of a resolvent expression at a fixed lambda > 0.
Matrix mdmp_limit_at(const Matrix& A, LimitFormula formula, double lambda, const Tolerances& tol);

// Walks lambda_j = lambda_start * decay^j and stops at the first step with
// ||X_j - X_(j-1)||_F <= conv_tol * ||X_j||_F.
LimitResult mdmp_limit(const Matrix& A, LimitFormula formula, const LimitSchedule& schedule,
                       const Tolerances& tol);

// (lambda I + A~ A)^-1 A~ -> A^m
LimitResult minkowski_limit(const Matrix& A, const LimitSchedule& schedule, const Tolerances& tol);

struct QuadratureConfig {
    std::optional<double> t_max;   // nullopt: 40 / (smallest real part of the spectrum)
    int panels = 64;               // minimum; raised until h * spectral_radius <= 2
    double spectral_margin = 1e-8; // required lower bound on the real parts

    void validate() const;
};

class SpectrumNotStableError : public Error {
public:
    explicit SpectrumNotStableError(Vector spectrum);

    const Vector& spectrum() const noexcept { return spectrum_; }

private:
    Vector spectrum_;
};

// int_0^t_max exp(-M t) dt by composite Gauss-Legendre panels.
struct ExponentialIntegral {
    Matrix value;
    Vector spectrum;
    double t_max = 0.0;
    long panels = 0;
};

ExponentialIntegral integrate_decaying_exponential(const Matrix& M, const QuadratureConfig& config);

struct IntegralResult {
    Matrix value;        // quadrature
    Matrix closed_form;  // M (B1~ B1)^-1 B1~
    Vector spectrum;     // eigenvalues of B1~ B1
    double t_max = 0.0;
    long panels = 0;
};

// Throws SpectrumNotStable when the integrand does not decay, ZeroPower when
// A^k = 0 and NotExists when A^m does not exist.
IntegralResult mdmp_integral(const Matrix& A, const QuadratureConfig& config, const Tolerances& tol);

} // namespace mdmp

#endif
