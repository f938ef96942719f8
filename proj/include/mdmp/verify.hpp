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

#ifndef MDMP_VERIFY_HPP
#define MDMP_VERIFY_HPP

//
// Residual reports for the defining equations of each inverse, the
// characterizations of the m-DMP inverse and its algebraic identities.
//
// Residuals are relative: ||lhs - rhs||_F / max(1, ||rhs||_F). Subspace
// inclusions are measured by projection:
//
//   R(X) in R(M)    ||(I - Q Q*) X|| / max(1, ||X||),  Q orthonormal basis of R(M)
//   N(M) in N(X)    ||X Z|| / max(1, ||X||),           Z orthonormal basis of N(M)
//

#include <optional>
#include <string>
#include <vector>

#include "mdmp/core.hpp"

namespace mdmp {

struct EquationResidual {
    std::string label;
    double absolute = 0.0;
    double relative = 0.0;
};

struct ReportFlag {
    std::string label;
    bool value = false;
};

struct EquationReport {
    std::string system_name;
    double tolerance = 0.0;
    std::vector<EquationResidual> equations;
    std::vector<ReportFlag> flags;  // informational, do not affect `passed`
    bool passed = true;

    EquationReport() = default;
    EquationReport(std::string name, double tol) : system_name(std::move(name)), tolerance(tol) {}

    void add(std::string label, const Matrix& lhs, const Matrix& rhs);
    void add_residual(std::string label, double absolute, double relative);
    void add_flag(std::string label, bool value);

    const EquationResidual* find(const std::string& label) const;
    std::optional<bool> flag(const std::string& label) const;

    // stable field order: system, tolerance, passed, equations, flags
    std::string to_json(int indent = 2) const;
};

std::string reports_to_json(const std::vector<EquationReport>& reports, int indent = 2);

double range_inclusion_residual(const Matrix& X, const Matrix& M, const Tolerances& tol,
                                double reference_scale = 0.0);
double null_inclusion_residual(const Matrix& X, const Matrix& M, const Tolerances& tol,
                               double reference_scale = 0.0);

// Projector onto R(T) along N(S), i.e. Q (Y Q)^-1 Y with Q a basis of R(T)
// and Y a row basis of S. Requires the two subspaces to be complementary.
// The scales anchor the rank cutoffs as in numeric_rank.
Matrix oblique_projector(const Matrix& T, const Matrix& S, const Tolerances& tol, double t_scale = 0.0,
                         double s_scale = 0.0);

// AXA = A, XAX = X, (AX)* = AX, (XA)* = XA
EquationReport check_penrose(const Matrix& A, const Matrix& X, const Tolerances& tol);
// AXA = A, XAX = X, (AX)~ = AX, (XA)~ = XA
EquationReport check_minkowski(const Matrix& A, const Matrix& X, const Tolerances& tol);
// XAX = X, AX = XA, A^(k+1) X = A^k
EquationReport check_drazin(const Matrix& A, const Matrix& X, const Tolerances& tol);
// XAX = X, XA = A^D A, A^k X = A^k A^m
EquationReport check_mdmp_system(const Matrix& A, const Matrix& X, const Tolerances& tol);

// One report per equivalent characterization of X = A^{D,m}:
//   range-drazin      R(X) in R(A^k),         A^D X = A^D A^m
//   range-power       R(X) in R(A^k),         A^k X = A^k A^m
//   null-right        N(A^k A^m) in N(X),     X A = A A^D
//   null-power        N(A^k A^m) in N(X),     X A^(k+1) = A^k
//   square-core       A X^2 = X,              A X = A^2 A^D A^m
//   square-projector  A X^2 = X,              A X = P[R(A^k), N(A^D A^m)]
//   square-power      A X^2 = X,              A^k X = A^k A^m
std::vector<EquationReport> check_characterizations(const Matrix& A, const Matrix& X, const Tolerances& tol);

// Identities of A^{D,m} computed by the definitional route: rank, range and
// projector structure, powers, (A^2 A^m)^D, double Drazin, the commutation
// equivalence and the nilpotent / nonsingular special cases.
EquationReport property_suite(const Matrix& A, const Tolerances& tol);

} // namespace mdmp

#endif
