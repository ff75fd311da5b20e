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

#ifndef MILPTD_MATRIX_HPP_
#define MILPTD_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "milptd/rational.hpp"

namespace milptd {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols,
                 std::vector<Rational> entries);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  // Column vector.
  static RationalMatrix column(std::span<const Rational> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  std::span<const Rational> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  const std::vector<Rational>& entries() const { return entries_; }

  RationalMatrix transpose() const;
  // Submatrix picking the given rows and columns, in the given order.
  RationalMatrix select(std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols) const;
  RationalMatrix select_cols(std::span<const std::size_t> cols) const;
  RationalMatrix select_rows(std::span<const std::size_t> rows) const;

  bool is_integral() const;
  bool is_zero() const;
  bool is_identity() const;
  // Largest absolute value of an entry, rounded up to an integer.
  BigInt max_abs() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x);

// [a | b]. Row counts must agree.
RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
// [a; b]. Column counts must agree.
RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);
// Block diagonal matrix diag(a, b).
RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b);

// Text form: one row per line, entries separated by a single space.
std::string to_string(const RationalMatrix& m);
std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

// Reads whitespace-separated rows, one per non-empty line; lines starting
// with '#' are skipped. Throws ParseError / DimensionError.
RationalMatrix parse_matrix(std::string_view text);

}  // namespace milptd

#endif  // MILPTD_MATRIX_HPP_
