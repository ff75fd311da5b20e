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

#ifndef MILPTD_INTEGRALIZATION_HPP_
#define MILPTD_INTEGRALIZATION_HPP_

#include <cstddef>
#include <span>

#include "milptd/fractionality.hpp"
#include "milptd/milp.hpp"

namespace milptd {

// lcm(1, ..., M). Throws ValidationError for M < 1 and CapExceededError
// when the result would need more than bit_cap bits.
BigInt choose_scale(const BigInt& m, std::size_t bit_cap = kDefaultBitCap);

// Substitutes x_Q = z_Q / scale: matrix (scale*A_Z  A_Q), rhs scale*b,
// bounds (l_Z, scale*l_Q) .. (u_Z, scale*u_Q), objective (scale*c_Z, c_Q).
// Every objective value is multiplied by scale, so minimizers correspond.
IlpInstance integralize(const MilpInstance& inst, const BigInt& scale);

// x = (z_Z, z_Q / scale). Throws FeasibilityError naming the first
// violated constraint (see MilpInstance::violation) when x is infeasible.
RationalVector recover(std::span<const BigInt> z_opt, const BigInt& scale,
                       const MilpInstance& inst);
RationalVector recover(std::span<const Rational> z_opt, const BigInt& scale,
                       const MilpInstance& inst);

// The forward map x -> (x_Z, scale * x_Q).
RationalVector embed(std::span<const Rational> x, const BigInt& scale,
                     const MilpInstance& inst);

}  // namespace milptd

#endif  // MILPTD_INTEGRALIZATION_HPP_
