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

#include "milptd/milp.hpp"

#include "milptd/error.hpp"

namespace milptd {

namespace {

void check_shapes(std::size_t m, std::size_t n, const RationalMatrix& a, const IntVector& c,
                  const IntVector& lower, const IntVector& upper) {
  if (a.rows() != m) throw DimensionError("constraint matrix and rhs disagree on rows");
  if (c.size() != n || lower.size() != n || upper.size() != n) {
    throw DimensionError("objective or bounds length differs from the variable count");
  }
  if (!a.is_integral()) throw ValidationError("constraint matrix must be integral");
  for (std::size_t j = 0; j < n; ++j) {
    if (lower[j] > upper[j]) {
      throw ValidationError("lower bound exceeds upper bound on variable " +
                            std::to_string(j));
    }
  }
}

Rational dot(std::span<const BigInt> c, std::span<const Rational> x) {
  if (c.size() != x.size()) throw DimensionError("objective length mismatch");
  Rational v = 0;
  for (std::size_t j = 0; j < c.size(); ++j) v += c[j] * x[j];
  return v;
}

std::optional<std::size_t> find_violation(const RationalMatrix& a, const IntVector& b,
                                          const IntVector& lower, const IntVector& upper,
                                          std::size_t integer_count,
                                          std::span<const Rational> x) {
  if (x.size() != a.cols()) throw DimensionError("solution length mismatch");
  const RationalVector ax = a * x;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (ax[i] != b[i]) return i;
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < lower[j] || x[j] > upper[j]) return b.size() + j;
  }
  for (std::size_t j = 0; j < integer_count; ++j) {
    if (!is_integral(x[j])) return b.size() + x.size() + j;
  }
  return std::nullopt;
}

}  // namespace

RationalVector to_rational(std::span<const BigInt> v) {
  return RationalVector(v.begin(), v.end());
}

RationalMatrix MilpInstance::matrix() const {
  if (a_int.rows() != a_frac.rows()) {
    throw DimensionError("integer and continuous parts disagree on rows");
  }
  return hstack(a_int, a_frac);
}

void MilpInstance::validate() const {
  check_shapes(rows(), vars(), matrix(), c, lower, upper);
}

Rational MilpInstance::objective(std::span<const Rational> x) const { return dot(c, x); }

std::optional<std::size_t> MilpInstance::violation(std::span<const Rational> x) const {
  return find_violation(matrix(), b, lower, upper, z(), x);
}

void IlpInstance::validate() const { check_shapes(rows(), vars(), a, c, lower, upper); }

Rational IlpInstance::objective(std::span<const Rational> x) const { return dot(c, x); }

std::optional<std::size_t> IlpInstance::violation(std::span<const Rational> x) const {
  return find_violation(a, b, lower, upper, vars(), x);
}

MilpInstance IlpInstance::as_milp() const {
  return {a, RationalMatrix(a.rows(), 0), b, c, lower, upper};
}

}  // namespace milptd
