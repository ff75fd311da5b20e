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

#ifndef MILPTD_LP_HPP_
#define MILPTD_LP_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "milptd/matrix.hpp"
#include "milptd/rational.hpp"

namespace milptd {

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded };

const char* to_string(SolveStatus status);

struct SolveStats {
  std::size_t nodes = 0;      // LP relaxations solved (or points enumerated)
  std::size_t pivots = 0;
  std::size_t lp_solves = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  RationalVector x;
  Rational objective = 0;
  // lp_solve_exact only: basic variables of the final basis, one per
  // independent row kept after row reduction.
  std::vector<std::size_t> basis;
  std::vector<std::size_t> kept_rows;
  SolveStats stats;
};

inline constexpr std::size_t kDefaultVertexCap = 12;

// min c x  s.t.  A x = b,  l <= x <= u  by a two-phase bounded-variable
// simplex in exact arithmetic with Bland's rule. Dependent rows are dropped
// first; an inconsistent dependent row means infeasible. The returned x is
// a vertex: the basis columns are invertible and every other variable sits
// at a bound.
SolveResult lp_solve_exact(const RationalMatrix& a, std::span<const Rational> b,
                           std::span<const Rational> l, std::span<const Rational> u,
                           std::span<const Rational> c);

// All basic feasible solutions of {A x = b, l <= x <= u}, deduplicated and
// sorted lexicographically. Throws CapExceededError when A has more than
// cap columns.
std::vector<RationalVector> vertex_enumerate(const RationalMatrix& a,
                                             std::span<const Rational> b,
                                             std::span<const Rational> l,
                                             std::span<const Rational> u,
                                             std::size_t cap = kDefaultVertexCap);

}  // namespace milptd

#endif  // MILPTD_LP_HPP_
