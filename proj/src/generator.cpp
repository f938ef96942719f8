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

#include "mdmp/generator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mdmp/minkowski.hpp"

namespace mdmp {

namespace {

Complex gaussian(std::mt19937_64& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Index uniform_index(std::mt19937_64& rng, Index lo, Index hi)
{
    return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

// Nilpotent block of order m whose largest Jordan block has size k.
Matrix nilpotent_block(std::mt19937_64& rng, Index m, Index k)
{
    Matrix N = Matrix::Zero(m, m);
    Index start = 0;
    Index block = k;
    while (start < m) {
        for (Index i = start; i + 1 < start + block; ++i)
            N(i, i + 1) = std::polar(uniform(rng, 0.5, 2.0), uniform(rng, 0.0, 2.0 * std::numbers::pi));
        start += block;
        if (start < m)
            block = uniform_index(rng, 1, std::min(k, m - start));
    }
    return N;
}

Matrix triangular_core(std::mt19937_64& rng, Index c)
{
    Matrix C = Matrix::Zero(c, c);
    for (Index i = 0; i < c; ++i) {
        C(i, i) = std::polar(uniform(rng, 0.5, 2.0), uniform(rng, 0.0, 2.0 * std::numbers::pi));
        for (Index j = i + 1; j < c; ++j)
            C(i, j) = 0.5 * gaussian(rng);
    }
    return C;
}

bool well_conditioned(const Matrix& M, double limit)
{
    return condition_number(M) <= limit;
}

// Rejects draws whose numerical structure would make the cross-route
// comparison a test of rounding instead of algebra.
bool acceptable(const Matrix& A, Index index, const Tolerances& tol, const GeneratorConfig& config)
{
    if (!minkowski_exists(A, tol).exists)
        return false;
    if (matrix_index(A, tol) != index)
        return false;
    const Index n = A.rows();
    const Index r = numeric_rank(A, tol);
    if (r == 0)
        return true;
    if (r < n) {
        const RealVector s = singular_values(A);
        if (s(r - 1) < 1e-4 * s(0))
            return false;
    }
    const FullRankFactor f = full_rank_factor(A, tol);
    if (!well_conditioned(minkowski_adjoint(f.B) * f.B, config.max_condition) ||
        !well_conditioned(f.C * minkowski_adjoint(f.C), config.max_condition))
        return false;
    if (r < n) {
        const HSDecomposition dec = hs_decompose(A, tol);
        if (!well_conditioned(metric_partition(dec).G1, config.max_condition) ||
            !well_conditioned(delta_matrix(dec), config.max_condition))
            return false;
        if (index > 0) {
            try {
                const FullRankChain chain = full_rank_chain(A, tol);
                if (!well_conditioned(chain.C.back() * chain.B.back(), config.max_condition))
                    return false;
            } catch (const Error&) {
                // nilpotent: no core to condition
            }
        }
    }
    return true;
}

} // namespace

Matrix random_unitary(std::mt19937_64& rng, Index n)
{
    Matrix Z(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            Z(i, j) = gaussian(rng);
    Eigen::HouseholderQR<Matrix> qr(Z);
    Matrix Q = qr.householderQ() * Matrix::Identity(n, n);
    // fix the phases of R's diagonal so that Q is Haar distributed
    const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < n; ++j) {
        const double mag = std::abs(R(j, j));
        if (mag > 0.0)
            Q.col(j) *= R(j, j) / mag;
    }
    return Q;
}

Instance generate_instance(std::uint64_t seed, Index n, Index index, const Tolerances& tol, Structure structure,
                           const GeneratorConfig& config)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "order must be positive");
    Index core = 0;
    switch (structure) {
    case Structure::Nonsingular:
        index = 0;
        break;
    case Structure::Nilpotent:
        if (index < 1 || index > n)
            throw Error(ErrorCode::InvalidArgument, "nilpotent index must lie in [1, n]");
        break;
    case Structure::Mixed:
        if (index < 1 || index > n - 1)
            throw Error(ErrorCode::InvalidArgument, "index must lie in [1, n - 1] for a singular, non-nilpotent matrix");
        break;
    }

    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(structure)};
    std::mt19937_64 rng(seq);

    for (int attempt = 1; attempt <= config.max_attempts; ++attempt) {
        switch (structure) {
        case Structure::Nonsingular: core = n; break;
        case Structure::Nilpotent: core = 0; break;
        case Structure::Mixed: core = uniform_index(rng, 1, n - index); break;
        }
        Matrix T = Matrix::Zero(n, n);
        if (core > 0)
            T.topLeftCorner(core, core) = triangular_core(rng, core);
        if (core < n)
            T.bottomRightCorner(n - core, n - core) = nilpotent_block(rng, n - core, index);
        for (Index i = 0; i < core; ++i)
            for (Index j = core; j < n; ++j)
                T(i, j) = 0.5 * gaussian(rng);

        const Matrix U = random_unitary(rng, n);
        Matrix A = U * T * U.adjoint();
        if (acceptable(A, index, tol, config))
            return Instance{std::move(A), n, index, seed, attempt};
    }
    std::ostringstream msg;
    msg << "no acceptable instance of order " << n << " and index " << index << " after " << config.max_attempts
        << " attempts";
    throw Error(ErrorCode::InvalidArgument, msg.str());
}

std::vector<Instance> generate_instance_set(std::uint64_t seed, std::size_t count, const Tolerances& tol,
                                            const GeneratorConfig& config)
{
    if (config.min_order < 2 || config.max_order < config.min_order || config.max_index < 1)
        throw Error(ErrorCode::InvalidArgument, "generator needs 2 <= min_order <= max_order and max_index >= 1");
    std::vector<Instance> set;
    set.reserve(count);
    std::mt19937_64 shape_rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const Index n = uniform_index(shape_rng, config.min_order, config.max_order);
        const Index k = uniform_index(shape_rng, 1, std::min(config.max_index, n - 1));
        const std::uint64_t instance_seed = shape_rng();
        set.push_back(generate_instance(instance_seed, n, k, tol, Structure::Mixed, config));
    }
    return set;
}

} // namespace mdmp
