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

#include "mdmp/reproduce.hpp"

#include <algorithm>
#include <functional>

#include "mdmp/classical.hpp"
#include "mdmp/minkowski.hpp"
#include "mdmp/solvers.hpp"
#include "mdmp/verify.hpp"
#include "mdmp/worked_examples.hpp"

namespace mdmp {

namespace {

constexpr double kClosedFormTol = 1e-12;
constexpr double kLimitTol = 1e-5;
constexpr double kResolventLambda = 1e-6;

struct Measured {
    bool passed = false;
    double value = 0.0;
    double bound = 0.0;
    std::string relation;
};

using CheckFn = std::function<Measured(const ReproduceConfig&)>;

struct Entry {
    FixtureCheck check;
    CheckFn run;
};

double max_abs(const Matrix& X, const Matrix& Y)
{
    if (X.rows() != Y.rows() || X.cols() != Y.cols())
        throw Error(ErrorCode::ShapeMismatch, "fixture comparison of differently shaped matrices");
    return (X - Y).cwiseAbs().maxCoeff();
}

Measured at_most(double value, double bound)
{
    return Measured{value <= bound, value, bound, "<="};
}

Measured at_least(double value, double bound)
{
    return Measured{value > bound, value, bound, ">"};
}

Measured equals(double value, double expected)
{
    return Measured{value == expected, value, expected, "=="};
}

// Printed inputs carry five decimals, so their numerical rank is judged at
// that precision rather than at machine precision.
Tolerances printed_data_tolerances(const ReproduceConfig& config)
{
    Tolerances t = config.tol;
    t.rank_rel_tol = 1e-4;
    t.cond_max = 1e8;
    return t;
}

Measured against_printed(const ReproduceConfig& config, const Matrix& computed, const Matrix& printed)
{
    return at_most(max_abs(computed, printed), config.fixture_tol);
}

Matrix limit_value(const ReproduceConfig& config, LimitFormula formula)
{
    return mdmp_limit(worked::index2_matrix(), formula, config.schedule, config.tol).value;
}

std::vector<Entry> build_entries()
{
    using worked::index2_matrix;
    using worked::printed_inverses;
    using worked::printed_system;
    std::vector<Entry> e;

    e.push_back({{"inverses.existence", "rank(A~AA~) = rank(A) = 2"}, [](const ReproduceConfig& c) {
                     const ExistenceReport r = minkowski_exists(index2_matrix(), c.tol);
                     const bool ok = r.exists && r.rank_A == 2 && r.rank_AsAAs == 2;
                     return Measured{ok, static_cast<double>(r.rank_AsAAs), 2.0, "=="};
                 }});
    e.push_back({{"inverses.index", "Ind(A) = 2"}, [](const ReproduceConfig& c) {
                     return equals(static_cast<double>(matrix_index(index2_matrix(), c.tol)), 2.0);
                 }});
    e.push_back({{"inverses.moore-penrose", "A^+ matches the printed matrix"}, [](const ReproduceConfig& c) {
                     return against_printed(c, moore_penrose(index2_matrix(), c.tol), printed_inverses().moore_penrose);
                 }});
    e.push_back({{"inverses.drazin", "A^D matches the printed matrix"}, [](const ReproduceConfig& c) {
                     return against_printed(c, drazin(index2_matrix(), c.tol), printed_inverses().drazin);
                 }});
    e.push_back({{"inverses.dmp", "A^{D,+} matches the printed matrix"}, [](const ReproduceConfig& c) {
                     return against_printed(c, dmp(index2_matrix(), c.tol), printed_inverses().dmp);
                 }});
    e.push_back({{"inverses.minkowski", "A^m matches the printed matrix"}, [](const ReproduceConfig& c) {
                     return against_printed(c, minkowski_inverse(index2_matrix(), c.tol), printed_inverses().minkowski);
                 }});
    e.push_back({{"inverses.mdmp", "A^{D,m} matches the printed matrix"}, [](const ReproduceConfig& c) {
                     return against_printed(c, mdmp(index2_matrix(), c.tol), printed_inverses().mdmp);
                 }});
    e.push_back({{"inverses.dual-mdmp", "A^{m,D} matches the printed matrix"}, [](const ReproduceConfig& c) {
                     return against_printed(c, dual_mdmp(index2_matrix(), c.tol), printed_inverses().dual_mdmp);
                 }});
    e.push_back({{"inverses.mdmp-routes", "block, full-rank-chain and composite routes give the printed A^{D,m}"},
                 [](const ReproduceConfig& c) {
                     const Matrix A = index2_matrix();
                     const Matrix P = printed_inverses().mdmp;
                     const HSDecomposition dec = hs_decompose(A, c.tol);
                     const HsMdmpForms hs = mdmp_hs(dec, metric_partition(dec), c.tol);
                     const auto [left, right] = mdmp_composite(A, c.tol);
                     const double worst = std::max({max_abs(hs.metric_form, P), max_abs(hs.partition_form, P),
                                                    max_abs(mdmp_fullrank(A, c.tol), P), max_abs(left, P),
                                                    max_abs(right, P)});
                     return at_most(worst, c.fixture_tol);
                 }});
    e.push_back({{"inverses.dual-mdmp-block", "block form of A^{m,D} gives the printed matrix"},
                 [](const ReproduceConfig& c) {
                     const Matrix A = index2_matrix();
                     return against_printed(c, dual_mdmp_hs(hs_decompose(A, c.tol), c.tol), printed_inverses().dual_mdmp);
                 }});
    e.push_back({{"inverses.distinct", "A^{D,m} differs from A^+, A^D, A^{D,+}, A^m and A^{m,D}"},
                 [](const ReproduceConfig& c) {
                     const worked::PrintedInverses p = printed_inverses();
                     const double closest = std::min({max_abs(p.mdmp, p.moore_penrose), max_abs(p.mdmp, p.drazin),
                                                      max_abs(p.mdmp, p.dmp), max_abs(p.mdmp, p.minkowski),
                                                      max_abs(p.mdmp, p.dual_mdmp)});
                     return at_least(closest, c.fixture_tol);
                 }});
    e.push_back({{"inverses.system-accepts-mdmp", "printed A^{D,m} solves XAX = X, XA = A^D A, A^k X = A^k A^m"},
                 [](const ReproduceConfig& c) {
                     Tolerances t = c.tol;
                     t.eq_rel_tol = c.fixture_tol;
                     const EquationReport r = check_mdmp_system(index2_matrix(), printed_inverses().mdmp, t);
                     double worst = 0.0;
                     for (const auto& eq : r.equations)
                         worst = std::max(worst, eq.relative);
                     return at_most(worst, c.fixture_tol);
                 }});
    e.push_back({{"inverses.system-rejects-dual", "printed A^{m,D} does not solve the m-DMP system"},
                 [](const ReproduceConfig& c) {
                     const EquationReport r = check_mdmp_system(index2_matrix(), printed_inverses().dual_mdmp, c.tol);
                     double worst = 0.0;
                     for (const auto& eq : r.equations)
                         worst = std::max(worst, eq.relative);
                     return at_least(worst, c.fixture_tol);
                 }});
    e.push_back({{"inverses.integral-guard", "B1~B1 has eigenvalues -1, -1: the integral is refused"},
                 [](const ReproduceConfig& c) {
                     try {
                         mdmp_integral(index2_matrix(), QuadratureConfig{}, c.tol);
                     } catch (const SpectrumNotStableError& err) {
                         double max_re = -1e300;
                         for (Index i = 0; i < err.spectrum().size(); ++i)
                             max_re = std::max(max_re, err.spectrum()(i).real());
                         return Measured{true, max_re, 0.0, "<="};
                     }
                     return Measured{false, 0.0, 0.0, "SpectrumNotStable expected"};
                 }});

    const std::pair<LimitFormula, const char*> resolvents[] = {
        {LimitFormula::LeftResolvent, "A^k (l I + A^m A^(k+1))^-1 A^m"},
        {LimitFormula::RightResolvent, "A^k A^m (l I + A^(k+1) A^m)^-1"},
        {LimitFormula::PowerResolvent, "(l I + A^k)^-1 A^k A^m"},
    };
    for (const auto& [formula, text] : resolvents) {
        const std::string name(formula_name(formula));
        e.push_back({{"limits." + name + "-closed-form",
                      std::string(text) + " at l = 1e-6 equals 2/(l+1), -1/(l+1), 1/(l+1)"},
                     [formula](const ReproduceConfig& c) {
                         const Matrix X = mdmp_limit_at(index2_matrix(), formula, kResolventLambda, c.tol);
                         return at_most(max_abs(X, worked::resolvent_closed_form(kResolventLambda)), kClosedFormTol);
                     }});
    }
    e.push_back({{"limits.adjoint-resolvent-closed-form",
                  "(l I + A^k)^-1 A^k (l I + A~A)^-1 A~ at l = 1e-6 equals (l+2)/(l+1)^3, ..."},
                 [](const ReproduceConfig& c) {
                     const Matrix X =
                         mdmp_limit_at(index2_matrix(), LimitFormula::AdjointResolvent, kResolventLambda, c.tol);
                     return at_most(max_abs(X, worked::adjoint_resolvent_closed_form(kResolventLambda)), kClosedFormTol);
                 }});
    for (const LimitFormula formula : {LimitFormula::LeftResolvent, LimitFormula::RightResolvent,
                                       LimitFormula::PowerResolvent, LimitFormula::AdjointResolvent}) {
        const std::string name(formula_name(formula));
        e.push_back({{"limits." + name + "-converges", name + " schedule converges to the printed A^{D,m}"},
                     [formula](const ReproduceConfig& c) {
                         return at_most(max_abs(limit_value(c, formula), printed_inverses().mdmp), kLimitTol);
                     }});
    }
    e.push_back({{"limits.minkowski-converges", "(l I + A~A)^-1 A~ converges to the printed A^m"},
                 [](const ReproduceConfig& c) {
                     const Matrix X = minkowski_limit(index2_matrix(), c.schedule, c.tol).value;
                     return at_most(max_abs(X, printed_inverses().minkowski), kLimitTol);
                 }});

    e.push_back({{"systems.decomposition", "printed U, S, K, L reproduce A"}, [](const ReproduceConfig& c) {
                     const worked::PrintedSystem p = printed_system();
                     HSDecomposition dec;
                     dec.U = p.U;
                     dec.sigma = p.sigma;
                     dec.K = p.K;
                     dec.L = p.L;
                     dec.rank = 2;
                     return against_printed(c, dec.reconstruct(), index2_matrix());
                 }});
    e.push_back({{"systems.metric-block", "G1 of U* G U matches the printed G1"}, [](const ReproduceConfig& c) {
                     const worked::PrintedSystem p = printed_system();
                     const Matrix UGU = p.U.adjoint() * minkowski_metric(5) * p.U;
                     return against_printed(c, UGU.topLeftCorner(2, 2), p.G1);
                 }});
    e.push_back({{"systems.b-split", "(b1; b2) = U* G b matches the printed b1, b2"}, [](const ReproduceConfig& c) {
                     const worked::PrintedSystem p = printed_system();
                     const Vector split = p.U.adjoint() * (minkowski_metric(5) * p.b);
                     Vector printed(5);
                     printed << p.b1, p.b2;
                     return against_printed(c, split, printed);
                 }});
    e.push_back({{"systems.core-drazin", "(S K)^D from the printed S, K"}, [](const ReproduceConfig& c) {
                     const worked::PrintedSystem p = printed_system();
                     const Matrix SK = p.sigma.cast<Complex>().asDiagonal() * p.K;
                     return against_printed(c, drazin(SK, printed_data_tolerances(c)), p.core_drazin);
                 }});
    e.push_back({{"systems.membership", "G1^-1 b1 lies in R((S K)^D) for the printed data"},
                 [](const ReproduceConfig& c) {
                     const worked::PrintedSystem p = printed_system();
                     const Vector y = p.G1.inverse() * p.b1;
                     const Tolerances t = printed_data_tolerances(c);
                     const Matrix Q = range_basis(p.core_drazin, t);
                     const double outside = (y - Q * (Q.adjoint() * y)).norm() / y.norm();
                     return at_most(outside, c.fixture_tol);
                 }});
    e.push_back({{"systems.power", "A^2 matches the printed A^k"}, [](const ReproduceConfig& c) {
                     return against_printed(c, matrix_power(index2_matrix(), 2), printed_system().power);
                 }});
    e.push_back({{"systems.bases", "printed V, W span N(A^k) and annihilate R(A^k)"}, [](const ReproduceConfig& c) {
                     const worked::PrintedSystem p = printed_system();
                     validate_complement_bases(index2_matrix(), ComplementBases{p.V, p.W, 1}, c.tol);
                     const Matrix Ak = matrix_power(index2_matrix(), 2);
                     return at_most(std::max((Ak * p.V).norm(), (p.W * Ak).norm()), c.fixture_tol);
                 }});
    e.push_back({{"systems.E", "V (W V)^-1 W matches the printed E"}, [](const ReproduceConfig& c) {
                     const worked::PrintedSystem p = printed_system();
                     return against_printed(c, complement_projector(ComplementBases{p.V, p.W, 1}, c.tol), p.E);
                 }});
    e.push_back({{"systems.projected", "A^{D,m} b matches the printed x"}, [](const ReproduceConfig& c) {
                     const worked::PrintedSystem p = printed_system();
                     return against_printed(c, solve_projected(index2_matrix(), p.b, std::nullopt, c.tol).particular, p.x);
                 }});
    e.push_back({{"systems.least-norm-x", "least-norm minimizer matches the printed x"}, [](const ReproduceConfig& c) {
                     const worked::PrintedSystem p = printed_system();
                     return against_printed(c, least_norm_min(index2_matrix(), p.b, c.tol).x, p.x);
                 }});
    e.push_back({{"systems.least-norm-min", "minimum ||b2|| matches the printed 0.24495"},
                 [](const ReproduceConfig& c) {
                     const worked::PrintedSystem p = printed_system();
                     return at_most(std::abs(least_norm_min(index2_matrix(), p.b, c.tol).min_value - p.min_value),
                                    c.fixture_tol);
                 }});
    e.push_back({{"systems.least-norm-objective", "||(AA^+)~ A x - b|| evaluated directly equals 0.24495"},
                 [](const ReproduceConfig& c) {
                     const worked::PrintedSystem p = printed_system();
                     return at_most(std::abs(least_norm_min(index2_matrix(), p.b, c.tol).objective - p.min_value),
                                    c.fixture_tol);
                 }});
    e.push_back({{"systems.cramer-printed-bases", "determinant ratios with the printed V, W give the printed x"},
                 [](const ReproduceConfig& c) {
                     const worked::PrintedSystem p = printed_system();
                     return against_printed(c, cramer_solve(index2_matrix(), p.b, ComplementBases{p.V, p.W, 1}, c.tol),
                                            p.x);
                 }});
    e.push_back({{"systems.cramer-auto-bases", "determinant ratios with SVD-built V, W give the printed x"},
                 [](const ReproduceConfig& c) {
                     const worked::PrintedSystem p = printed_system();
                     return against_printed(c, cramer_solve(index2_matrix(), p.b, std::nullopt, c.tol), p.x);
                 }});
    return e;
}

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> table = build_entries();
    return table;
}

} // namespace

std::vector<FixtureCheck> fixture_checks()
{
    std::vector<FixtureCheck> out;
    for (const auto& entry : entries())
        out.push_back(entry.check);
    return out;
}

std::vector<FixtureOutcome> run_fixture_checks(const ReproduceConfig& config, const std::string& prefix)
{
    config.tol.validate();
    config.schedule.validate();
    if (!(config.fixture_tol > 0.0))
        throw Error(ErrorCode::InvalidArgument, "fixture tolerance must be positive");

    std::vector<FixtureOutcome> out;
    for (const auto& entry : entries()) {
        if (entry.check.name.rfind(prefix, 0) != 0)
            continue;
        FixtureOutcome o;
        o.name = entry.check.name;
        o.description = entry.check.description;
        try {
            const Measured m = entry.run(config);
            o.passed = m.passed;
            o.value = m.value;
            o.bound = m.bound;
            o.relation = m.relation;
        } catch (const std::exception& err) {
            o.passed = false;
            o.detail = err.what();
        }
        out.push_back(std::move(o));
    }
    return out;
}

} // namespace mdmp
