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

#include "mdmp/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace mdmp {

namespace {

[[noreturn]] void parse_fail(const std::string& message)
{
    throw Error(ErrorCode::ParseError, message);
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

double to_double(const std::string& token)
{
    // strtod handles exponents, inf/nan spellings and leading '+'
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0')
        parse_fail("not a number: '" + token + "'");
    if (!std::isfinite(value))
        parse_fail("non-finite entry: '" + token + "'");
    return value;
}

long to_index(const std::string& token)
{
    long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        parse_fail("not an integer: '" + token + "'");
    return value;
}

std::string round_to(double value, int precision)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
    std::string s(buffer);
    if (s == "-0")
        s = "0";
    return s;
}

bool is_real(const Matrix& A)
{
    return (A.imag().array() == 0.0).all();
}

} // namespace

Matrix parse_matrix_market(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line))
        parse_fail("empty Matrix Market input");

    std::istringstream banner(line);
    std::string tag, object, layout, field, symmetry;
    banner >> tag >> object >> layout >> field >> symmetry;
    if (lower(tag) != "%%matrixmarket" || lower(object) != "matrix")
        parse_fail("missing %%MatrixMarket matrix banner");
    layout = lower(layout);
    field = lower(field);
    symmetry = lower(symmetry);
    if (layout != "array" && layout != "coordinate")
        parse_fail("unsupported layout '" + layout + "'");
    if (field != "real" && field != "integer" && field != "complex" && field != "pattern")
        parse_fail("unsupported field '" + field + "'");
    if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric" &&
        symmetry != "hermitian")
        parse_fail("unsupported symmetry '" + symmetry + "'");
    if (layout == "array" && field == "pattern")
        parse_fail("pattern field requires coordinate layout");
    if (symmetry == "hermitian" && field != "complex")
        parse_fail("hermitian symmetry requires complex field");

    std::vector<std::string> tokens;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '%')
            continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok)
            tokens.push_back(tok);
    }

    std::size_t pos = 0;
    auto next = [&]() -> const std::string& {
        if (pos >= tokens.size())
            parse_fail("unexpected end of Matrix Market data");
        return tokens[pos++];
    };

    const long rows = to_index(next());
    const long cols = to_index(next());
    if (rows < 1 || cols < 1)
        parse_fail("matrix dimensions must be positive");
    if (symmetry != "general" && rows != cols)
        parse_fail("symmetric storage requires a square matrix");

    const bool complex_field = field == "complex";
    auto read_value = [&]() -> Complex {
        if (field == "pattern")
            return Complex(1.0, 0.0);
        const double re = to_double(next());
        const double im = complex_field ? to_double(next()) : 0.0;
        return Complex(re, im);
    };
    auto mirror = [&](Complex v) -> Complex {
        if (symmetry == "skew-symmetric")
            return -v;
        if (symmetry == "hermitian")
            return std::conj(v);
        return v;
    };

    Matrix A = Matrix::Zero(rows, cols);
    if (layout == "array") {
        // column-major; symmetric variants store the lower triangle only
        for (long j = 0; j < cols; ++j) {
            const long start = symmetry == "general" ? 0 : (symmetry == "skew-symmetric" ? j + 1 : j);
            for (long i = start; i < rows; ++i) {
                const Complex v = read_value();
                A(i, j) = v;
                if (i != j && symmetry != "general")
                    A(j, i) = mirror(v);
            }
        }
    } else {
        const long nnz = to_index(next());
        if (nnz < 0)
            parse_fail("negative entry count");
        for (long e = 0; e < nnz; ++e) {
            const long i = to_index(next()) - 1;
            const long j = to_index(next()) - 1;
            if (i < 0 || i >= rows || j < 0 || j >= cols)
                parse_fail("coordinate entry out of range");
            const Complex v = read_value();
            A(i, j) = v;
            if (i != j && symmetry != "general")
                A(j, i) = mirror(v);
        }
    }
    if (pos != tokens.size())
        parse_fail("trailing data after Matrix Market entries");
    return A;
}

Matrix parse_matrix_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") || !doc.contains("data"))
        parse_fail("JSON matrix needs rows, cols and data");
    if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer())
        parse_fail("rows and cols must be integers");
    const long rows = doc["rows"].get<long>();
    const long cols = doc["cols"].get<long>();
    if (rows < 1 || cols < 1)
        parse_fail("matrix dimensions must be positive");
    const auto& data = doc["data"];
    if (!data.is_array() || static_cast<long>(data.size()) != rows * cols)
        parse_fail("data must hold rows*cols entries");

    Matrix A(rows, cols);
    for (long k = 0; k < rows * cols; ++k) {
        const auto& entry = data[static_cast<std::size_t>(k)];
        double re = 0.0, im = 0.0;
        if (entry.is_number()) {
            re = entry.get<double>();
        } else if (entry.is_array() && entry.size() == 2 && entry[0].is_number() && entry[1].is_number()) {
            re = entry[0].get<double>();
            im = entry[1].get<double>();
        } else {
            parse_fail("entry " + std::to_string(k) + " is not [re, im]");
        }
        if (!std::isfinite(re) || !std::isfinite(im))
            parse_fail("non-finite entry");
        A(k / cols, k % cols) = Complex(re, im);
    }
    return A;
}

Matrix parse_matrix(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        parse_fail("empty matrix input");
    if (text[first] == '{')
        return parse_matrix_json(text);
    return parse_matrix_market(text.substr(first));
}

Matrix read_matrix(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        parse_fail("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix(buffer.str());
}

std::string format_matrix(const Matrix& A, MatrixFormat format, int precision)
{
    if (precision < 1 || precision > 17)
        throw Error(ErrorCode::InvalidArgument, "precision must lie in [1, 17]");
    std::ostringstream out;
    switch (format) {
    case MatrixFormat::MatrixMarket: {
        const bool real = is_real(A);
        out << "%%MatrixMarket matrix array " << (real ? "real" : "complex") << " general\n";
        out << A.rows() << " " << A.cols() << "\n";
        for (Index j = 0; j < A.cols(); ++j)
            for (Index i = 0; i < A.rows(); ++i) {
                out << round_to(A(i, j).real(), precision);
                if (!real)
                    out << " " << round_to(A(i, j).imag(), precision);
                out << "\n";
            }
        break;
    }
    case MatrixFormat::Json: {
        // hand-rolled so the digits match `precision` exactly
        out << "{\"rows\":" << A.rows() << ",\"cols\":" << A.cols() << ",\"data\":[";
        for (Index i = 0; i < A.rows(); ++i)
            for (Index j = 0; j < A.cols(); ++j) {
                if (i != 0 || j != 0)
                    out << ",";
                out << "[" << round_to(A(i, j).real(), precision) << ","
                    << round_to(A(i, j).imag(), precision) << "]";
            }
        out << "]}\n";
        break;
    }
    case MatrixFormat::Pretty: {
        // imaginary parts that print as zero are dropped
        const double shown = 0.5 * std::pow(10.0, -precision);
        const bool real = (A.imag().array().abs() < shown).all();
        std::vector<std::string> cells;
        std::size_t width = 0;
        for (Index i = 0; i < A.rows(); ++i)
            for (Index j = 0; j < A.cols(); ++j) {
                std::ostringstream cell;
                cell.setf(std::ios::fixed);
                cell.precision(precision);
                const double re = std::abs(A(i, j).real()) < shown ? 0.0 : A(i, j).real();
                cell << re;
                if (!real) {
                    const double im = std::abs(A(i, j).imag()) < shown ? 0.0 : A(i, j).imag();
                    cell << (im < 0 ? "-" : "+") << std::abs(im) << "i";
                }
                cells.push_back(cell.str());
                width = std::max(width, cells.back().size());
            }
        for (Index i = 0; i < A.rows(); ++i) {
            for (Index j = 0; j < A.cols(); ++j) {
                const auto& cell = cells[static_cast<std::size_t>(i * A.cols() + j)];
                out << (j == 0 ? "" : "  ") << std::string(width - cell.size(), ' ') << cell;
            }
            out << "\n";
        }
        break;
    }
    }
    return out.str();
}

} // namespace mdmp
