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

#ifndef MILPTD_ILP_HPP_
#define MILPTD_ILP_HPP_

#include <cstddef>

#include "milptd/lp.hpp"
#include "milptd/milp.hpp"

namespace milptd {

inline constexpr std::size_t kDefaultNodeLimit = 1000000;
inline constexpr std::size_t kDefaultOracleCap = 1000000;

// Best-bound branch and bound on exact LP relaxations. Branches on a most
// fractional variable (lowest index on ties); a node is pruned when its
// bound is >= the incumbent, with no tolerance. Throws CapExceededError
// after node_limit relaxations.
SolveResult ilp_solve(const IlpInstance& inst, std::size_t node_limit = kDefaultNodeLimit);

// Enumerates every integer assignment of the z integer variables and solves
// the remaining LP in the continuous variables exactly. Throws
// CapExceededError when the integer box holds more than cap points.
SolveResult milp_oracle(const MilpInstance& inst, std::size_t cap = kDefaultOracleCap);

// Number of integer points in the box of the integer variables.
BigInt integer_box_volume(const MilpInstance& inst);

}  // namespace milptd

#endif  // MILPTD_ILP_HPP_
