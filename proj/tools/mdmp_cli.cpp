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

// mdmp command-line front end. Talks to the library only through mdmp.h.
//
// Exit codes:
//   0  success
//   1  usage, parse or shape error
//   2  the requested inverse does not exist or a precondition fails
//   3  numerical guard tripped (near-singular factor, no convergence, ...)
//   4  verification or reproduction failed

#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mdmp/mdmp.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kPrecondition = 2, kNumerical = 3, kFailed = 4 };

struct MatrixDeleter {
    void operator()(mdmp_matrix* m) const { mdmp_matrix_free(m); }
};
using MatrixPtr = std::unique_ptr<mdmp_matrix, MatrixDeleter>;

struct StringDeleter {
    void operator()(char* s) const { mdmp_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code(mdmp_status status)
{
    switch (status) {
    case MDMP_OK:
        return kOk;
    case MDMP_INVALID_ARGUMENT:
    case MDMP_PARSE_ERROR:
    case MDMP_SHAPE_MISMATCH:
        return kUsage;
    case MDMP_NOT_EXISTS:
    case MDMP_INDEX_TOO_LARGE:
    case MDMP_SINGULAR_DELTA:
    case MDMP_SINGULAR_G1:
    case MDMP_CONDITION_FAILED:
    case MDMP_FULL_RANK:
    case MDMP_ZERO_POWER:
        return kPrecondition;
    default:
        return kNumerical;
    }
}

// Thrown out of subcommands so that main() reports one diagnostic line.
struct Failure {
    mdmp_status status;
    std::string context;
};

void check(mdmp_status status, const std::string& context)
{
    if (status != MDMP_OK)
        throw Failure{status, context};
}

MatrixPtr load(const std::string& path)
{
    mdmp_matrix* m = nullptr;
    check(mdmp_matrix_load(path.c_str(), &m), "reading " + path);
    return MatrixPtr(m);
}

struct Settings {
    mdmp_options options{};
    std::string format;
    int precision = 0;
    std::string formula;

    Settings() { mdmp_options_default(&options); }

    void add_numeric_flags(CLI::App* app)
    {
        app->add_option("--tol", options.tol.eq_rel_tol, "relative residual accepted by equation checks")
            ->check(CLI::PositiveNumber);
        app->add_option("--rank-tol", options.tol.rank_rel_tol, "relative singular-value cutoff for numerical rank")
            ->check(CLI::Range(0.0, 1.0));
        app->add_option("--cond-max", options.tol.cond_max, "largest condition number treated as invertible")
            ->check(CLI::PositiveNumber);
    }

    void add_output_flags(CLI::App* app, const std::string& default_format)
    {
        format = default_format;
        app->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "matrix-market", "pretty"}))
            ->capture_default_str();
        app->add_option("--precision", precision, "significant digits (pretty: decimals), 3..17")
            ->check(CLI::Range(3, 17));
    }

    void add_limit_flags(CLI::App* app)
    {
        app->add_option("--formula", formula, "resolvent used by the limit route")
            ->check(CLI::IsMember({"left-resolvent", "right-resolvent", "power-resolvent", "adjoint-resolvent"}));
        app->add_option("--lambda-start", options.schedule.lambda_start, "first shift of the limit schedule");
        app->add_option("--decay", options.schedule.decay, "ratio between consecutive shifts");
        app->add_option("--max-steps", options.schedule.max_steps, "number of shifts tried");
        app->add_option("--conv-tol", options.schedule.conv_tol, "relative change that declares convergence");
        app->add_option("--t-max", options.quadrature.t_max, "integration horizon (default: from the spectrum)");
        app->add_option("--panels", options.quadrature.panels, "minimum Gauss-Legendre panels");
    }

    const mdmp_options* finish()
    {
        options.formula = formula.empty() ? nullptr : formula.c_str();
        return &options;
    }

    int digits() const { return precision != 0 ? precision : (format == "pretty" ? 5 : 17); }
};

void print_matrix(const mdmp_matrix* m, const Settings& s)
{
    char* text = nullptr;
    check(mdmp_matrix_format(m, s.format.c_str(), s.digits(), &text), "formatting output");
    StringPtr owned(text);
    std::fputs(text, stdout);
}

int run_compute(const std::string& input, const std::string& kind, const std::string& route, Settings& s)
{
    const MatrixPtr A = load(input);
    mdmp_matrix* out = nullptr;
    check(mdmp_compute(A.get(), kind.c_str(), route.empty() ? nullptr : route.c_str(), s.finish(), &out),
          "computing " + kind);
    const MatrixPtr X(out);
    print_matrix(X.get(), s);
    return kOk;
}

int run_verify(const std::string& a_path, const std::string& x_path, const std::string& system, Settings& s)
{
    const MatrixPtr A = load(a_path);
    MatrixPtr X;
    if (!x_path.empty())
        X = load(x_path);
    char* report = nullptr;
    int passed = 0;
    check(mdmp_verify(A.get(), X.get(), system.c_str(), s.finish(), &report, &passed), "verifying " + system);
    StringPtr owned(report);
    std::printf("%s\n", report);
    return passed ? kOk : kFailed;
}

int run_solve(const std::string& a_path, const std::string& b_path, const std::string& mode,
              const std::string& v_path, const std::string& V_path, const std::string& W_path, Settings& s)
{
    const MatrixPtr A = load(a_path);
    const MatrixPtr b = load(b_path);
    MatrixPtr v, V, W;
    if (!v_path.empty())
        v = load(v_path);
    if (!V_path.empty())
        V = load(V_path);
    if (!W_path.empty())
        W = load(W_path);
    mdmp_matrix* x = nullptr;
    char* report = nullptr;
    check(mdmp_solve(A.get(), b.get(), mode.c_str(), v.get(), V.get(), W.get(), s.finish(), &x, &report),
          "solving (" + mode + ")");
    const MatrixPtr solution(x);
    StringPtr owned(report);
    if (s.format == "json") {
        std::printf("%s\n", report);
    } else {
        print_matrix(solution.get(), s);
        std::fprintf(stderr, "%s\n", report);
    }
    return kOk;
}

int run_reproduce(bool list, double fixture_tol, const std::string& filter, bool as_json, Settings& s)
{
    char* report = nullptr;
    int all_passed = 0;
    check(mdmp_reproduce(s.finish(), fixture_tol, filter.c_str(), list ? 1 : 0, &report, &all_passed),
          "running worked examples");
    StringPtr owned(report);
    if (as_json) {
        std::printf("%s\n", report);
        return list || all_passed ? kOk : kFailed;
    }
    const auto items = nlohmann::json::parse(report);
    if (list) {
        for (const auto& item : items)
            std::printf("%-40s %s\n", item["name"].get<std::string>().c_str(),
                        item["description"].get<std::string>().c_str());
        return kOk;
    }
    int passed = 0;
    for (const auto& item : items) {
        const bool ok = item["passed"].get<bool>();
        passed += ok ? 1 : 0;
        std::printf("%s  %-40s %10.3g %-2s %-8.3g %s\n", ok ? "PASS" : "FAIL", item["name"].get<std::string>().c_str(),
                    item["value"].get<double>(), item["relation"].get<std::string>().c_str(),
                    item["bound"].get<double>(), item["description"].get<std::string>().c_str());
        if (item.contains("detail"))
            std::printf("      %s\n", item["detail"].get<std::string>().c_str());
    }
    std::printf("%d/%zu assertions passed\n", passed, items.size());
    return all_passed ? kOk : kFailed;
}

int run_generate(std::uint64_t seed, std::size_t order, std::size_t index, const std::string& structure, Settings& s)
{
    mdmp_matrix* out = nullptr;
    check(mdmp_generate(seed, order, index, structure.c_str(), s.finish(), &out), "generating an instance");
    const MatrixPtr A(out);
    print_matrix(A.get(), s);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized inverses in Minkowski space: compute, verify, solve, reproduce"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mdmp_version()));

    Settings compute_s, verify_s, solve_s, reproduce_s, generate_s;
    int code = kOk;

    std::string input, kind = "mdmp", route;
    CLI::App* compute = app.add_subcommand("compute", "compute a generalized inverse");
    compute->add_option("input", input, "matrix file (Matrix Market or JSON)")->required();
    compute->add_option("--kind", kind, "moore-penrose | drazin | group | dmp | minkowski | mdmp | dual-mdmp | m-core")
        ->capture_default_str();
    compute->add_option("--route", route,
                        "mdmp: definitional | hs | hs-partition | fullrank | composite | composite-right | limit | "
                        "integral; minkowski: definitional | hs | limit; drazin, dual-mdmp: definitional | hs");
    compute_s.add_numeric_flags(compute);
    compute_s.add_output_flags(compute, "pretty");
    compute_s.add_limit_flags(compute);
    compute->callback([&] { code = run_compute(input, kind, route, compute_s); });

    std::string a_path, x_path, system = "mdmp";
    CLI::App* verify = app.add_subcommand("verify", "residual report for a candidate inverse (exit 4 if it fails)");
    verify->add_option("A", a_path, "matrix file")->required();
    verify->add_option("X", x_path, "candidate inverse (not needed for --system properties)");
    verify->add_option("--system,--kind", system,
                       "moore-penrose | minkowski | drazin | mdmp | characterizations | properties")
        ->capture_default_str();
    verify_s.add_numeric_flags(verify);
    verify->callback([&] { code = run_verify(a_path, x_path, system, verify_s); });

    std::string sa_path, b_path, mode = "projected", v_path, V_path, W_path;
    CLI::App* solve = app.add_subcommand("solve", "solve a system through the m-DMP inverse");
    solve->add_option("A", sa_path, "matrix file")->required();
    solve->add_option("b", b_path, "right-hand side (n x 1)")->required();
    solve->add_option("--mode", mode, "projected | leastnorm | cramer")
        ->check(CLI::IsMember({"projected", "leastnorm", "cramer"}))
        ->capture_default_str();
    solve->add_option("--v", v_path, "free vector of the general solution (projected)");
    solve->add_option("--V", V_path, "basis of N(A^k) (cramer)");
    solve->add_option("--W", W_path, "matrix with N(W) = R(A^k) (cramer)");
    solve_s.add_numeric_flags(solve);
    solve_s.add_output_flags(solve, "json");
    solve->callback([&] { code = run_solve(sa_path, b_path, mode, v_path, V_path, W_path, solve_s); });

    bool list = false, as_json = false;
    double fixture_tol = 1e-4;
    std::string filter;
    CLI::App* reproduce = app.add_subcommand("reproduce", "replay the worked examples (exit 4 on any failure)");
    reproduce->add_flag("--list", list, "list assertions without running them");
    reproduce->add_option("--tol", fixture_tol, "absolute entrywise tolerance against printed values")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    reproduce->add_option("--rank-tol", reproduce_s.options.tol.rank_rel_tol, "relative singular-value cutoff");
    reproduce->add_option("--filter", filter, "only assertions whose name starts with this prefix");
    reproduce->add_flag("--json", as_json, "print the raw JSON report");
    reproduce->callback([&] { code = run_reproduce(list, fixture_tol, filter, as_json, reproduce_s); });

    std::uint64_t seed = 0;
    std::size_t order = 5, index = 2;
    std::string structure = "mixed";
    CLI::App* generate = app.add_subcommand("generate", "seeded random matrix whose Minkowski inverse exists");
    generate->add_option("--seed", seed, "random seed")->required();
    generate->add_option("--order", order, "matrix order")->capture_default_str();
    generate->add_option("--index", index, "Ind(A) (ignored for nonsingular)")->capture_default_str();
    generate->add_option("--structure", structure, "mixed | nilpotent | nonsingular")
        ->check(CLI::IsMember({"mixed", "nilpotent", "nonsingular"}))
        ->capture_default_str();
    generate_s.add_numeric_flags(generate);
    generate_s.add_output_flags(generate, "matrix-market");
    generate->callback([&] { code = run_generate(seed, order, index, structure, generate_s); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int cli = app.exit(e);
        return cli == 0 ? kOk : kUsage;
    } catch (const Failure& f) {
        std::fprintf(stderr, "mdmp: %s failed [%s]: %s\n", f.context.c_str(), mdmp_status_name(f.status),
                     mdmp_last_error());
        return exit_code(f.status);
    }
    std::fflush(stdout);
    return code;
}
