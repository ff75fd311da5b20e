// Copyright 2026 The milptd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MILPTD_LINALG_HPP_
#define MILPTD_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "milptd/matrix.hpp"
#include "milptd/rational.hpp"

namespace milptd {

// Exact determinant. Rows are scaled to integers and reduced with Bareiss'
// fraction-free elimination, so every intermediate value is a minor of the
// scaled matrix. Throws DimensionError for non-square input.
Rational mat_det(const RationalMatrix& m);

// Exact inverse via fraction-free Gauss-Jordan elimination with full
// pivoting. Throws DimensionError for non-square input and
// SingularMatrixError when det(m) == 0.
RationalMatrix mat_inverse(const RationalMatrix& m);

// Largest denominator over all entries (1 for integral or empty matrices).
BigInt fractionality(const RationalMatrix& m);

// Least common multiple of all entry denominators.
BigInt common_denominator(const RationalMatrix& m);
BigInt common_denominator(std::span<const Rational> values);

std::size_t rank(const RationalMatrix& m);

// Greedy leftmost columns that are linearly independent, scanning left to
// right and keeping a column whenever it increases the rank.
std::vector<std::size_t> independent_columns(const RationalMatrix& m);

// Indices of a maximal set of linearly independent rows, scanning top to
// bottom. When rhs is given, returns nullopt if some dependent row is
// inconsistent with it (the system m x = rhs has no solution).
std::optional<std::vector<std::size_t>> independent_rows(
    const RationalMatrix& m, std::span<const Rational> rhs = {});

// Solves m x = rhs for square invertible m.
RationalVector solve(const RationalMatrix& m, std::span<const Rational> rhs);

// Converts each row to integers by multiplying with the lcm of its
// denominators; the multipliers are returned in row_scale.
std::vector<std::vector<BigInt>> integer_rows(const RationalMatrix& m,
                                              std::vector<BigInt>& row_scale);

}  // namespace milptd

#endif  // MILPTD_LINALG_HPP_
