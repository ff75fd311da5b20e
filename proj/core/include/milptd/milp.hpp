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

#ifndef MILPTD_MILP_HPP_
#define MILPTD_MILP_HPP_

#include <cstddef>
#include <optional>
#include <span>

#include "milptd/matrix.hpp"
#include "milptd/rational.hpp"

namespace milptd {

// min c x  s.t.  (a_int a_frac) x = b,  lower <= x <= upper,
// x in Z^z x Q^q. Integer columns come first. All data is integral.
struct MilpInstance {
  RationalMatrix a_int;   // m x z
  RationalMatrix a_frac;  // m x q
  IntVector b;
  IntVector c;
  IntVector lower;
  IntVector upper;

  std::size_t rows() const { return b.size(); }
  std::size_t z() const { return a_int.cols(); }
  std::size_t q() const { return a_frac.cols(); }
  std::size_t vars() const { return z() + q(); }

  // (a_int a_frac), m x (z + q).
  RationalMatrix matrix() const;

  // Throws DimensionError on shape mismatches and ValidationError on
  // non-integral data or lower > upper.
  void validate() const;

  Rational objective(std::span<const Rational> x) const;

  // Index of the first violated condition: rows 0..m-1 are the equality
  // constraints, m + j is the box of variable j, and m + vars() + j flags a
  // fractional value on integer variable j. nullopt when x is feasible.
  std::optional<std::size_t> violation(std::span<const Rational> x) const;
};

// Pure integer program: every variable is integral.
struct IlpInstance {
  RationalMatrix a;
  IntVector b;
  IntVector c;
  IntVector lower;
  IntVector upper;

  std::size_t rows() const { return b.size(); }
  std::size_t vars() const { return a.cols(); }

  void validate() const;
  Rational objective(std::span<const Rational> x) const;
  std::optional<std::size_t> violation(std::span<const Rational> x) const;

  // The same program viewed as a MILP with q = 0.
  MilpInstance as_milp() const;
};

RationalVector to_rational(std::span<const BigInt> v);

}  // namespace milptd

#endif  // MILPTD_MILP_HPP_
