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

#include "mdmp/mdmp.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>
#include <string_view>

#include "json.hpp"

#include "mdmp/classical.hpp"
#include "mdmp/generator.hpp"
#include "mdmp/matrix_io.hpp"
#include "mdmp/minkowski.hpp"
#include "mdmp/representations.hpp"
#include "mdmp/reproduce.hpp"
#include "mdmp/solvers.hpp"
#include "mdmp/verify.hpp"

struct mdmp_matrix {
    mdmp::Matrix value;
};

namespace {

using mdmp::ErrorCode;
using mdmp::Matrix;
using ordered_json = nlohmann::ordered_json;

thread_local std::string g_last_error;

mdmp_status to_status(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return MDMP_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return MDMP_PARSE_ERROR;
    case ErrorCode::ShapeMismatch: return MDMP_SHAPE_MISMATCH;
    case ErrorCode::ZeroMatrix: return MDMP_ZERO_MATRIX;
    case ErrorCode::NilpotentTermination: return MDMP_NILPOTENT_TERMINATION;
    case ErrorCode::IndexTooLarge: return MDMP_INDEX_TOO_LARGE;
    case ErrorCode::NotExists: return MDMP_NOT_EXISTS;
    case ErrorCode::NearSingularFactor: return MDMP_NEAR_SINGULAR_FACTOR;
    case ErrorCode::SingularDelta: return MDMP_SINGULAR_DELTA;
    case ErrorCode::SingularG1: return MDMP_SINGULAR_G1;
    case ErrorCode::ZeroPower: return MDMP_ZERO_POWER;
    case ErrorCode::NoConvergence: return MDMP_NO_CONVERGENCE;
    case ErrorCode::SpectrumNotStable: return MDMP_SPECTRUM_NOT_STABLE;
    case ErrorCode::ConditionFailed: return MDMP_CONDITION_FAILED;
    case ErrorCode::FullRank: return MDMP_FULL_RANK;
    case ErrorCode::SingularWV: return MDMP_SINGULAR_WV;
    case ErrorCode::SingularBordered: return MDMP_SINGULAR_BORDERED;
    }
    return MDMP_INTERNAL_ERROR;
}

mdmp_status fail(mdmp_status status, std::string message)
{
    g_last_error = std::move(message);
    return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
mdmp_status guarded(Body&& body)
{
    try {
        g_last_error.clear();
        return body();
    } catch (const mdmp::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(MDMP_INTERNAL_ERROR, "out of memory");
    } catch (const std::exception& e) {
        return fail(MDMP_INTERNAL_ERROR, e.what());
    }
}

void invalid(const char* message)
{
    throw mdmp::Error(ErrorCode::InvalidArgument, message);
}

const Matrix& deref(const mdmp_matrix* m, const char* what)
{
    if (m == nullptr)
        throw mdmp::Error(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
    return m->value;
}

char* copy_string(const std::string& text)
{
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

mdmp_matrix* wrap(Matrix value)
{
    return new mdmp_matrix{std::move(value)};
}

mdmp_options resolve(const mdmp_options* options)
{
    mdmp_options o;
    mdmp_options_default(&o);
    if (options != nullptr)
        o = *options;
    return o;
}

mdmp::Tolerances tolerances(const mdmp_options& o)
{
    mdmp::Tolerances t;
    t.rank_rel_tol = o.tol.rank_rel_tol;
    t.eq_rel_tol = o.tol.eq_rel_tol;
    t.cond_max = o.tol.cond_max;
    t.validate();
    return t;
}

mdmp::LimitSchedule schedule(const mdmp_options& o)
{
    mdmp::LimitSchedule s;
    s.lambda_start = o.schedule.lambda_start;
    s.decay = o.schedule.decay;
    s.max_steps = o.schedule.max_steps;
    s.conv_tol = o.schedule.conv_tol;
    s.validate();
    return s;
}

mdmp::QuadratureConfig quadrature(const mdmp_options& o)
{
    mdmp::QuadratureConfig q;
    if (o.quadrature.t_max > 0.0)
        q.t_max = o.quadrature.t_max;
    q.panels = o.quadrature.panels;
    q.spectral_margin = o.quadrature.spectral_margin;
    q.validate();
    return q;
}

mdmp::LimitFormula formula(const mdmp_options& o)
{
    if (o.formula == nullptr)
        return mdmp::LimitFormula::LeftResolvent;
    const auto f = mdmp::parse_formula(o.formula);
    if (!f)
        throw mdmp::Error(ErrorCode::InvalidArgument, std::string("unknown limit formula '") + o.formula + "'");
    return *f;
}

[[noreturn]] void unknown_route(mdmp::GinvKind kind, std::string_view route)
{
    throw mdmp::Error(ErrorCode::InvalidArgument, "route '" + std::string(route) + "' is not available for " +
                                                      std::string(mdmp::kind_name(kind)));
}

Matrix compute(const Matrix& A, mdmp::GinvKind kind, std::string_view route, const mdmp_options& o)
{
    using mdmp::GinvKind;
    const mdmp::Tolerances tol = tolerances(o);
    const bool definitional = route == "definitional";
    switch (kind) {
    case GinvKind::MoorePenrose:
        if (definitional)
            return mdmp::moore_penrose(A, tol);
        break;
    case GinvKind::Drazin:
        if (definitional)
            return mdmp::drazin(A, tol);
        if (route == "hs")
            return mdmp::drazin_hs(mdmp::hs_decompose(A, tol), tol);
        break;
    case GinvKind::Group:
        if (definitional)
            return mdmp::group_inverse(A, tol);
        break;
    case GinvKind::DMP:
        if (definitional)
            return mdmp::dmp(A, tol);
        break;
    case GinvKind::Minkowski:
        if (definitional)
            return mdmp::minkowski_inverse(A, tol);
        if (route == "hs")
            return mdmp::minkowski_inverse_hs(mdmp::hs_decompose(A, tol), tol);
        if (route == "limit")
            return mdmp::minkowski_limit(A, schedule(o), tol).value;
        break;
    case GinvKind::MDMP:
        if (definitional)
            return mdmp::mdmp(A, tol);
        if (route == "hs" || route == "hs-partition") {
            mdmp::require_square(A, "mdmp operand");
            if (!mdmp::minkowski_exists(A, tol).exists)
                throw mdmp::NotExistsError(mdmp::minkowski_exists(A, tol));
            const mdmp::HSDecomposition dec = mdmp::hs_decompose(A, tol);
            const mdmp::HsMdmpForms forms = mdmp::mdmp_hs(dec, mdmp::metric_partition(dec), tol);
            return route == "hs" ? forms.metric_form : forms.partition_form;
        }
        if (route == "fullrank")
            return mdmp::mdmp_fullrank(A, tol);
        if (route == "composite")
            return mdmp::mdmp_composite(A, tol).first;
        if (route == "composite-right")
            return mdmp::mdmp_composite(A, tol).second;
        if (route == "limit")
            return mdmp::mdmp_limit(A, formula(o), schedule(o), tol).value;
        if (route == "integral")
            return mdmp::mdmp_integral(A, quadrature(o), tol).value;
        break;
    case GinvKind::DualMDMP:
        if (definitional)
            return mdmp::dual_mdmp(A, tol);
        if (route == "hs") {
            mdmp::require_square(A, "dual_mdmp operand");
            const mdmp::ExistenceReport report = mdmp::minkowski_exists(A, tol);
            if (!report.exists)
                throw mdmp::NotExistsError(report);
            return mdmp::dual_mdmp_hs(mdmp::hs_decompose(A, tol), tol);
        }
        break;
    case GinvKind::MCore:
        if (definitional)
            return mdmp::m_core(A, tol);
        break;
    }
    unknown_route(kind, route);
}

ordered_json vector_json(const mdmp::Vector& v)
{
    ordered_json out = ordered_json::array();
    for (mdmp::Index i = 0; i < v.size(); ++i)
        out.push_back({v(i).real(), v(i).imag()});
    return out;
}

mdmp::Vector as_vector(const Matrix& M, const char* what)
{
    if (M.cols() != 1)
        throw mdmp::Error(ErrorCode::ShapeMismatch, std::string(what) + " must be a single column");
    return M.col(0);
}

} // namespace

extern "C" {

void mdmp_options_default(mdmp_options* options)
{
    if (options == nullptr)
        return;
    const mdmp::Tolerances t;
    const mdmp::LimitSchedule s;
    const mdmp::QuadratureConfig q;
    options->tol = {t.rank_rel_tol, t.eq_rel_tol, t.cond_max};
    options->schedule = {s.lambda_start, s.decay, s.max_steps, s.conv_tol};
    options->quadrature = {0.0, q.panels, q.spectral_margin};
    options->formula = nullptr;
}

const char* mdmp_status_name(mdmp_status status)
{
    switch (status) {
    case MDMP_OK: return "OK";
    case MDMP_INVALID_ARGUMENT: return "InvalidArgument";
    case MDMP_PARSE_ERROR: return "ParseError";
    case MDMP_SHAPE_MISMATCH: return "ShapeMismatch";
    case MDMP_ZERO_MATRIX: return "ZeroMatrix";
    case MDMP_NILPOTENT_TERMINATION: return "NilpotentTermination";
    case MDMP_INDEX_TOO_LARGE: return "IndexTooLarge";
    case MDMP_NOT_EXISTS: return "NotExists";
    case MDMP_NEAR_SINGULAR_FACTOR: return "NearSingularFactor";
    case MDMP_SINGULAR_DELTA: return "SingularDelta";
    case MDMP_SINGULAR_G1: return "SingularG1";
    case MDMP_ZERO_POWER: return "ZeroPower";
    case MDMP_NO_CONVERGENCE: return "NoConvergence";
    case MDMP_SPECTRUM_NOT_STABLE: return "SpectrumNotStable";
    case MDMP_CONDITION_FAILED: return "ConditionFailed";
    case MDMP_FULL_RANK: return "FullRank";
    case MDMP_SINGULAR_WV: return "SingularWV";
    case MDMP_SINGULAR_BORDERED: return "SingularBordered";
    case MDMP_INTERNAL_ERROR: return "InternalError";
    }
    return "Unknown";
}

const char* mdmp_last_error(void)
{
    return g_last_error.c_str();
}

const char* mdmp_version(void)
{
    return "0.1.0";
}

mdmp_status mdmp_matrix_new(size_t rows, size_t cols, mdmp_matrix** out)
{
    return guarded([&] {
        if (out == nullptr || rows == 0 || cols == 0)
            invalid("mdmp_matrix_new needs positive dimensions and an output pointer");
        *out = wrap(Matrix::Zero(static_cast<mdmp::Index>(rows), static_cast<mdmp::Index>(cols)));
        return MDMP_OK;
    });
}

mdmp_status mdmp_matrix_from_interleaved(size_t rows, size_t cols, const double* values, mdmp_matrix** out)
{
    return guarded([&] {
        if (out == nullptr || values == nullptr || rows == 0 || cols == 0)
            invalid("mdmp_matrix_from_interleaved needs positive dimensions, data and an output pointer");
        Matrix M(static_cast<mdmp::Index>(rows), static_cast<mdmp::Index>(cols));
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                const double* z = values + 2 * (i * cols + j);
                M(static_cast<mdmp::Index>(i), static_cast<mdmp::Index>(j)) = {z[0], z[1]};
            }
        *out = wrap(std::move(M));
        return MDMP_OK;
    });
}

mdmp_status mdmp_matrix_copy(const mdmp_matrix* source, mdmp_matrix** out)
{
    return guarded([&] {
        if (out == nullptr)
            invalid("output pointer is NULL");
        *out = wrap(deref(source, "source"));
        return MDMP_OK;
    });
}

void mdmp_matrix_free(mdmp_matrix* matrix)
{
    delete matrix;
}

size_t mdmp_matrix_rows(const mdmp_matrix* matrix)
{
    return matrix == nullptr ? 0 : static_cast<size_t>(matrix->value.rows());
}

size_t mdmp_matrix_cols(const mdmp_matrix* matrix)
{
    return matrix == nullptr ? 0 : static_cast<size_t>(matrix->value.cols());
}

mdmp_status mdmp_matrix_get(const mdmp_matrix* matrix, size_t row, size_t col, double* re, double* im)
{
    return guarded([&] {
        const Matrix& M = deref(matrix, "matrix");
        if (row >= static_cast<size_t>(M.rows()) || col >= static_cast<size_t>(M.cols()))
            throw mdmp::Error(ErrorCode::ShapeMismatch, "entry index out of range");
        const mdmp::Complex z = M(static_cast<mdmp::Index>(row), static_cast<mdmp::Index>(col));
        if (re != nullptr)
            *re = z.real();
        if (im != nullptr)
            *im = z.imag();
        return MDMP_OK;
    });
}

mdmp_status mdmp_matrix_set(mdmp_matrix* matrix, size_t row, size_t col, double re, double im)
{
    return guarded([&] {
        if (matrix == nullptr)
            invalid("matrix is NULL");
        Matrix& M = matrix->value;
        if (row >= static_cast<size_t>(M.rows()) || col >= static_cast<size_t>(M.cols()))
            invalid("entry index out of range");
        if (!std::isfinite(re) || !std::isfinite(im))
            invalid("entry must be finite");
        M(static_cast<mdmp::Index>(row), static_cast<mdmp::Index>(col)) = {re, im};
        return MDMP_OK;
    });
}

mdmp_status mdmp_matrix_load(const char* path, mdmp_matrix** out)
{
    return guarded([&] {
        if (path == nullptr || out == nullptr)
            invalid("path and output pointer are required");
        *out = wrap(mdmp::read_matrix(path));
        return MDMP_OK;
    });
}

mdmp_status mdmp_matrix_parse(const char* text, mdmp_matrix** out)
{
    return guarded([&] {
        if (text == nullptr || out == nullptr)
            invalid("text and output pointer are required");
        *out = wrap(mdmp::parse_matrix(text));
        return MDMP_OK;
    });
}

mdmp_status mdmp_matrix_format(const mdmp_matrix* matrix, const char* format, int precision, char** out)
{
    return guarded([&] {
        if (out == nullptr)
            invalid("output pointer is NULL");
        if (precision < 3 || precision > 17)
            invalid("precision must lie in [3, 17]");
        const std::string_view name = format == nullptr ? "matrix-market" : format;
        mdmp::MatrixFormat f;
        if (name == "json")
            f = mdmp::MatrixFormat::Json;
        else if (name == "matrix-market")
            f = mdmp::MatrixFormat::MatrixMarket;
        else if (name == "pretty")
            f = mdmp::MatrixFormat::Pretty;
        else
            throw mdmp::Error(ErrorCode::InvalidArgument, "unknown output format '" + std::string(name) + "'");
        *out = copy_string(mdmp::format_matrix(deref(matrix, "matrix"), f, precision));
        return MDMP_OK;
    });
}

void mdmp_string_free(char* text)
{
    std::free(text);
}

mdmp_status mdmp_compute(const mdmp_matrix* a, const char* kind, const char* route, const mdmp_options* options,
                         mdmp_matrix** out)
{
    return guarded([&] {
        if (out == nullptr || kind == nullptr)
            invalid("kind and output pointer are required");
        const auto k = mdmp::parse_kind(kind);
        if (!k)
            throw mdmp::Error(ErrorCode::InvalidArgument, std::string("unknown inverse kind '") + kind + "'");
        const mdmp_options o = resolve(options);
        *out = wrap(compute(deref(a, "A"), *k, route == nullptr ? "definitional" : route, o));
        return MDMP_OK;
    });
}

mdmp_status mdmp_verify(const mdmp_matrix* a, const mdmp_matrix* x, const char* system, const mdmp_options* options,
                        char** report_json, int* passed)
{
    return guarded([&] {
        if (system == nullptr || report_json == nullptr)
            invalid("system and report pointer are required");
        const mdmp::Tolerances tol = tolerances(resolve(options));
        const Matrix& A = deref(a, "A");
        const std::string_view name = system;
        std::string text;
        bool ok = false;
        if (name == "properties") {
            const mdmp::EquationReport r = mdmp::property_suite(A, tol);
            text = r.to_json();
            ok = r.passed;
        } else if (name == "characterizations") {
            const auto reports = mdmp::check_characterizations(A, deref(x, "X"), tol);
            text = mdmp::reports_to_json(reports);
            ok = true;
            for (const auto& r : reports)
                ok = ok && r.passed;
        } else {
            const Matrix& X = deref(x, "X");
            mdmp::EquationReport r;
            if (name == "moore-penrose")
                r = mdmp::check_penrose(A, X, tol);
            else if (name == "minkowski")
                r = mdmp::check_minkowski(A, X, tol);
            else if (name == "drazin")
                r = mdmp::check_drazin(A, X, tol);
            else if (name == "mdmp")
                r = mdmp::check_mdmp_system(A, X, tol);
            else
                throw mdmp::Error(ErrorCode::InvalidArgument, "unknown equation system '" + std::string(name) + "'");
            text = r.to_json();
            ok = r.passed;
        }
        *report_json = copy_string(text);
        if (passed != nullptr)
            *passed = ok ? 1 : 0;
        return MDMP_OK;
    });
}

mdmp_status mdmp_solve(const mdmp_matrix* a, const mdmp_matrix* b, const char* mode, const mdmp_matrix* v,
                       const mdmp_matrix* V, const mdmp_matrix* W, const mdmp_options* options, mdmp_matrix** x,
                       char** report_json)
{
    return guarded([&] {
        if (mode == nullptr || x == nullptr)
            invalid("mode and solution pointer are required");
        const mdmp::Tolerances tol = tolerances(resolve(options));
        const Matrix& A = deref(a, "A");
        const mdmp::Vector rhs = as_vector(deref(b, "b"), "b");
        const std::string_view name = mode;
        ordered_json report;
        report["mode"] = name;
        mdmp::Vector solution;

        if (name == "projected") {
            std::optional<mdmp::Vector> free;
            if (v != nullptr)
                free = as_vector(v->value, "v");
            const mdmp::SolveResult r = mdmp::solve_projected(A, rhs, free, tol);
            solution = r.general ? *r.general : r.particular;
            report["residual"] = r.residual;
            report["unique_on_range_ak"] = r.unique_on_range_ak;
            report["projector_idempotence"] =
                mdmp::relative_residual(r.homogeneous_projector * r.homogeneous_projector, r.homogeneous_projector);
            if (r.general) {
                report["general_residual"] = r.general_residual;
                report["particular"] = vector_json(r.particular);
            }
        } else if (name == "leastnorm") {
            const mdmp::MinResult r = mdmp::least_norm_min(A, rhs, tol);
            solution = r.x;
            report["min_value"] = r.min_value;
            report["objective"] = r.objective;
            report["condition_ok"] = r.condition_ok;
            report["condition_residual"] = r.condition_residual;
            report["b1"] = vector_json(r.b1);
            report["b2"] = vector_json(r.b2);
        } else if (name == "cramer") {
            if ((V == nullptr) != (W == nullptr))
                invalid("cramer needs both V and W, or neither");
            std::optional<mdmp::ComplementBases> bases;
            if (V != nullptr) {
                const Matrix Ak = mdmp::matrix_power(A, mdmp::matrix_index(A, tol));
                bases = mdmp::ComplementBases{V->value, W->value, mdmp::numeric_rank(Ak, tol)};
            }
            solution = mdmp::cramer_solve(A, rhs, bases, tol);
            const mdmp::Vector direct = mdmp::mdmp(A, tol) * rhs;
            report["bases"] = bases ? "supplied" : "auto";
            report["agreement_with_projected"] = mdmp::relative_residual(solution, direct);
        } else {
            throw mdmp::Error(ErrorCode::InvalidArgument, "unknown solve mode '" + std::string(name) + "'");
        }

        report["x"] = vector_json(solution);
        if (report_json != nullptr)
            *report_json = copy_string(report.dump(2));
        *x = wrap(solution);
        return MDMP_OK;
    });
}

mdmp_status mdmp_reproduce(const mdmp_options* options, double fixture_tol, const char* prefix, int list_only,
                           char** report_json, int* all_passed)
{
    return guarded([&] {
        if (report_json == nullptr)
            invalid("report pointer is required");
        ordered_json out = ordered_json::array();
        bool ok = true;
        if (list_only) {
            const std::string filter = prefix == nullptr ? "" : prefix;
            for (const auto& c : mdmp::fixture_checks()) {
                if (c.name.rfind(filter, 0) != 0)
                    continue;
                out.push_back({{"name", c.name}, {"description", c.description}});
            }
        } else {
            const mdmp_options o = resolve(options);
            mdmp::ReproduceConfig config;
            config.tol = tolerances(o);
            config.schedule = schedule(o);
            if (fixture_tol > 0.0)
                config.fixture_tol = fixture_tol;
            for (const auto& r : mdmp::run_fixture_checks(config, prefix == nullptr ? "" : prefix)) {
                ordered_json item;
                item["name"] = r.name;
                item["description"] = r.description;
                item["passed"] = r.passed;
                item["value"] = r.value;
                item["relation"] = r.relation;
                item["bound"] = r.bound;
                if (!r.detail.empty())
                    item["detail"] = r.detail;
                out.push_back(std::move(item));
                ok = ok && r.passed;
            }
        }
        *report_json = copy_string(out.dump(2));
        if (all_passed != nullptr)
            *all_passed = ok ? 1 : 0;
        return MDMP_OK;
    });
}

mdmp_status mdmp_generate(uint64_t seed, size_t order, size_t index, const char* structure,
                          const mdmp_options* options, mdmp_matrix** out)
{
    return guarded([&] {
        if (out == nullptr)
            invalid("output pointer is NULL");
        const std::string_view name = structure == nullptr ? "mixed" : structure;
        mdmp::Structure s;
        if (name == "mixed")
            s = mdmp::Structure::Mixed;
        else if (name == "nilpotent")
            s = mdmp::Structure::Nilpotent;
        else if (name == "nonsingular")
            s = mdmp::Structure::Nonsingular;
        else
            throw mdmp::Error(ErrorCode::InvalidArgument, "unknown structure '" + std::string(name) + "'");
        const mdmp::Tolerances tol = tolerances(resolve(options));
        *out = wrap(mdmp::generate_instance(seed, static_cast<mdmp::Index>(order), static_cast<mdmp::Index>(index),
                                            tol, s)
                        .A);
        return MDMP_OK;
    });
}

} // extern "C"
