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

#ifndef MDMP_CLASSICAL_HPP
#define MDMP_CLASSICAL_HPP

// Euclidean generalized inverses: Moore-Penrose, Drazin, group and DMP.

#include <optional>
#include <string_view>

#include "mdmp/core.hpp"

namespace mdmp {

enum class GinvKind { MoorePenrose, Drazin, Group, DMP, Minkowski, MDMP, DualMDMP, MCore };

std::string_view kind_name(GinvKind kind) noexcept;
std::optional<GinvKind> parse_kind(std::string_view name) noexcept;

// A^+ by reciprocal singular values above the rank cutoff. Any shape.
Matrix moore_penrose(const Matrix& A, const Tolerances& tol);

// A^D through the full-rank chain: B1...Bk (Ck Bk)^-(k+1) Ck...C1.
// Nonsingular A gives A^-1, nilpotent A gives 0.
Matrix drazin(const Matrix& A, const Tolerances& tol);

// A^D = U [(SK)^D, ((SK)^D)^2 SL; 0, 0] U*, with (SK)^D from drazin().
Matrix drazin_hs(const HSDecomposition& dec, const Tolerances& tol);

// Throws IndexTooLarge when Ind(A) > 1.
Matrix group_inverse(const Matrix& A, const Tolerances& tol);

// A^D A A^+
Matrix dmp(const Matrix& A, const Tolerances& tol);

} // namespace mdmp

#endif
