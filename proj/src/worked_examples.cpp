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

#include "mdmp/worked_examples.hpp"

#include <initializer_list>

namespace mdmp::worked {

namespace {

Matrix rows(std::initializer_list<std::initializer_list<double>> values)
{
    const Index r = static_cast<Index>(values.size());
    const Index c = static_cast<Index>(values.begin()->size());
    Matrix M(r, c);
    Index i = 0;
    for (const auto& row : values) {
        Index j = 0;
        for (const double v : row)
            M(i, j++) = v;
        ++i;
    }
    return M;
}

Vector column(std::initializer_list<double> values)
{
    Vector v(static_cast<Index>(values.size()));
    Index i = 0;
    for (const double x : values)
        v(i++) = x;
    return v;
}

// rows 1-2 equal to (a, b, c, 0, 0), everything else zero
Matrix two_row_pattern(double a, double b, double c)
{
    Matrix M = Matrix::Zero(5, 5);
    for (Index i = 0; i < 2; ++i) {
        M(i, 0) = a;
        M(i, 1) = b;
        M(i, 2) = c;
    }
    return M;
}

} // namespace

Matrix index2_matrix()
{
    return rows({{1, 0, 0, 0, 0}, {1, 0, 0, 1, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}});
}

Matrix light_cone_matrix()
{
    return rows({{1, 0}, {1, 0}});
}

PrintedInverses printed_inverses()
{
    PrintedInverses p;
    p.moore_penrose = rows({{0.66667, 0.33333, -0.33333, 0, 0},
                            {0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0},
                            {-0.33333, 0.33333, 0.66667, 0, 0},
                            {0, 0, 0, 0, 0}});
    p.drazin = rows({{1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}});
    p.dmp = rows({{0.66667, 0.33333, -0.33333, 0, 0},
                  {0.66667, 0.33333, -0.33333, 0, 0},
                  {0, 0, 0, 0, 0},
                  {0, 0, 0, 0, 0},
                  {0, 0, 0, 0, 0}});
    p.minkowski = rows({{2, -1, 1, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {-1, 1, 0, 0, 0}, {0, 0, 0, 0, 0}});
    p.mdmp = rows({{2, -1, 1, 0, 0}, {2, -1, 1, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}});
    p.dual_mdmp = rows({{1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}});
    return p;
}

Matrix resolvent_closed_form(double lambda)
{
    const double s = lambda + 1.0;
    return two_row_pattern(2.0 / s, -1.0 / s, 1.0 / s);
}

Matrix adjoint_resolvent_closed_form(double lambda)
{
    const double s = lambda + 1.0;
    const double cube = s * s * s;
    return two_row_pattern((lambda + 2.0) / cube, -s / cube, 1.0 / cube);
}

PrintedSystem printed_system()
{
    PrintedSystem p;
    p.b = column({0.15735, 0.15735, 0.1415, -0.1, -0.2});
    p.V = rows({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    p.W = rows({{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {-1, 1, 0, 0, 0}});
    p.U = rows({{-0.40825, 0.70711, 0, 0, 0.57735},
                {-0.8165, 0, 0, 0, -0.57735},
                {-0.40825, -0.70711, 0, 0, 0.57735},
                {0, 0, 0, 1, 0},
                {0, 0, 1, 0, 0}});
    p.sigma = RealVector(2);
    p.sigma << 1.7321, 1.0;
    p.K = rows({{0.28868, -0.5}, {-0.28868, 0.5}});
    p.L = rows({{0, -0.70711, -0.40825}, {0, -0.70711, 0.40825}});
    p.G1 = rows({{-0.66667, -0.57735}, {-0.57735, 0}});
    p.b1 = column({0.12201, 0.21132});
    p.b2 = column({0.2, 0.1, 0.1});
    p.core_drazin = rows({{0.5, -0.86603}, {-0.28868, 0.5}});
    p.power = rows({{1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}});
    p.E = rows({{0, 0, 0, 0, 0}, {-1, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
    p.x = column({0.29885, 0.29885, 0, 0, 0});
    p.min_value = 0.24495;
    return p;
}

} // namespace mdmp::worked
