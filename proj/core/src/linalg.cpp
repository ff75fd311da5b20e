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

#include "milptd/linalg.hpp"

#include <numeric>
#include <utility>

#include "milptd/error.hpp"

namespace milptd {
namespace {

void require_square(const RationalMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw DimensionError(std::string(what) + " needs a square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// Reduced row echelon form in place; returns pivot columns in order.
std::vector<std::size_t> row_reduce(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<BigInt>> integer_rows(const RationalMatrix& m,
                                              std::vector<BigInt>& row_scale) {
  row_scale.assign(m.rows(), BigInt(1));
  std::vector<std::vector<BigInt>> out(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt s = common_denominator(m.row(i));
    row_scale[i] = s;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& e = m(i, j);
      out[i][j] = e.get_num() * (s / e.get_den());
    }
  }
  return out;
}

Rational mat_det(const RationalMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  std::vector<BigInt> scale;
  auto a = integer_rows(m, scale);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt denom = 1;
  for (const auto& s : scale) denom *= s;
  Rational det(sign * prev, denom);
  det.canonicalize();
  return det;
}

RationalMatrix mat_inverse(const RationalMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  if (n == 0) return RationalMatrix();
  std::vector<BigInt> scale;
  auto left = integer_rows(m, scale);
  std::vector<std::vector<BigInt>> right(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) right[i][i] = 1;
  std::vector<std::size_t> col_perm(n);
  std::iota(col_perm.begin(), col_perm.end(), std::size_t{0});

  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // Full pivoting: smallest nonzero entry in the trailing block, first in
    // row-major order on ties.
    std::size_t pr = n, pc = n;
    std::size_t best_bits = 0;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (left[i][j] == 0) continue;
        const std::size_t bits = bit_length(left[i][j]);
        if (pr == n || bits < best_bits) {
          pr = i;
          pc = j;
          best_bits = bits;
        }
      }
    }
    if (pr == n) throw SingularMatrixError();
    if (pr != k) {
      std::swap(left[pr], left[k]);
      std::swap(right[pr], right[k]);
    }
    if (pc != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(left[i][pc], left[i][k]);
      std::swap(col_perm[pc], col_perm[k]);
    }
    const BigInt pivot = left[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const BigInt factor = left[i][k];
      BigInt t;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        t = pivot * left[i][j] - factor * left[k][j];
        mpz_divexact(left[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      for (std::size_t j = 0; j < n; ++j) {
        t = pivot * right[i][j] - factor * right[k][j];
        mpz_divexact(right[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      left[i][k] = 0;
    }
    prev = pivot;
  }

  // left is now prev * I; the inverse of the scaled matrix is Q * right / prev.
  RationalMatrix inv(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t row = col_perm[k];
    for (std::size_t j = 0; j < n; ++j) {
      Rational v(right[k][j] * scale[j], prev);
      v.canonicalize();
      inv(row, j) = v;
    }
  }
  return inv;
}

BigInt fractionality(const RationalMatrix& m) {
  BigInt best = 1;
  for (const auto& e : m.entries()) {
    if (e.get_den() > best) best = e.get_den();
  }
  return best;
}

BigInt common_denominator(std::span<const Rational> values) {
  BigInt l = 1;
  for (const auto& e : values) {
    if (e.get_den() != 1) l = lcm(l, e.get_den());
  }
  return l;
}

BigInt common_denominator(const RationalMatrix& m) {
  return common_denominator(std::span<const Rational>(m.entries()));
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return row_reduce(a).size();
}

std::vector<std::size_t> independent_columns(const RationalMatrix& m) {
  RationalMatrix a = m;
  return row_reduce(a);
}

std::optional<std::vector<std::size_t>> independent_rows(
    const RationalMatrix& m, std::span<const Rational> rhs) {
  const bool check_rhs = !rhs.empty();
  if (check_rhs && rhs.size() != m.rows()) {
    throw DimensionError("right-hand side length does not match row count");
  }
  struct BasisRow {
    RationalVector coeffs;
    Rational rhs;
    std::size_t pivot;
  };
  std::vector<BasisRow> basis;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RationalVector row(m.row(i).begin(), m.row(i).end());
    Rational b = check_rhs ? rhs[i] : Rational(0);
    for (const auto& br : basis) {
      if (row[br.pivot] == 0) continue;
      const Rational f = row[br.pivot];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * br.coeffs[j];
      b -= f * br.rhs;
    }
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot == row.size()) {
      if (b != 0) return std::nullopt;
      continue;
    }
    const Rational inv = 1 / row[pivot];
    for (auto& v : row) v *= inv;
    b *= inv;
    basis.push_back({std::move(row), b, pivot});
    kept.push_back(i);
  }
  return kept;
}

RationalVector solve(const RationalMatrix& m, std::span<const Rational> rhs) {
  return mat_inverse(m) * rhs;
}

}  // namespace milptd
