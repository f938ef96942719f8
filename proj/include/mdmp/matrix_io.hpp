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

#ifndef MDMP_MATRIX_IO_HPP
#define MDMP_MATRIX_IO_HPP

// Matrix exchange formats:
//   - Matrix Market, array or coordinate, real/integer/complex/pattern,
//     general/symmetric/skew-symmetric/hermitian
//   - JSON {"rows":m,"cols":n,"data":[[re,im],...]} in row-major order
// All readers throw Error(ParseError).

#include <string>
#include <string_view>

#include "mdmp/core.hpp"

namespace mdmp {

enum class MatrixFormat { Json, MatrixMarket, Pretty };

Matrix parse_matrix_market(std::string_view text);
Matrix parse_matrix_json(std::string_view text);

// Sniffs the format: a leading '{' means JSON, anything else Matrix Market.
Matrix parse_matrix(std::string_view text);
Matrix read_matrix(const std::string& path);

// precision is the number of significant digits (17 round-trips doubles).
std::string format_matrix(const Matrix& A, MatrixFormat format, int precision = 17);

} // namespace mdmp

#endif
