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

#ifndef MILPTD_INSTANCES_HPP_
#define MILPTD_INSTANCES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "milptd/matrix.hpp"
#include "milptd/milp.hpp"
#include "milptd/treedepth.hpp"

namespace milptd {

enum class Family {
  kLemma4A1,    // upper bidiagonal (2, -1)
  kLemma4A2,    // arrowhead of ones
  kLemma5P1,    // (1 ... 1) x = 1, objective sum x_i^2
  kLemma5P2,    // one variable, objective (x - 1/k)^2
  kLemma5P3,    // one variable in [0, 1], objective x^3 + 2x^2 - x
  kNFold,       // t top rows over n bricks, t x t diagonal bricks
  kTwoStage,    // t first-stage columns, t x t second-stage bricks
  kRandomTd,    // random rows along ancestor chains of a random forest
  kRandomMilp,  // random mixed instance used by the test corpora
  kRandomIlp,   // random pure integer instance
};

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::kLemma4A1;
  std::size_t n = 0;   // size; number of bricks for nfold/twostage, columns otherwise
  std::size_t m = 0;   // rows for random families (0: family default)
  std::size_t t = 1;   // brick size
  std::size_t k = 0;   // height cap for random_td, denominator for lemma5_p2
  std::size_t ints = 0;  // integer variables for random_milp
  std::uint64_t seed = 0;
  BigInt magnitude = 2;
  BigInt box = 3;  // bound radius for random instances
};

// Throws ValidationError when a parameter is out of range for the family.
void validate(const FamilySpec& spec);

// Data-only record for the nonlinear objectives; the solver never
// minimizes these.
struct MipDescriptor {
  Family family = Family::kLemma5P1;
  MilpInstance constraints;  // objective part unused (zero)
  std::string objective;     // human-readable formula
  // Coefficients of the univariate polynomial objective (p2, p3), lowest
  // degree first.
  std::vector<Rational> polynomial;
};

using Generated = std::variant<RationalMatrix, MilpInstance, MipDescriptor>;

Generated generate(const FamilySpec& spec);

// random_td together with the forest its rows were drawn along.
std::pair<RationalMatrix, TdDecomposition> generate_random_td(const FamilySpec& spec);

// The natural decomposition of a (bricks x t) 2-stage matrix's columns:
// the t first-stage columns as a path, each brick's t columns as a path
// hanging below it. Also valid for the dual graph of the n-fold transpose.
TdDecomposition two_stage_decomposition(std::size_t bricks, std::size_t t);

// 2n variables: integer copies first, then the original variables as
// continuous ones, with constraint matrix ((0 A), (I -I)), rhs (b, 0) and
// duplicated bounds. The objective is carried by the continuous copy.
MilpInstance reduce_ilp_to_milp(const IlpInstance& ilp);

// Closed forms used by the verifiers.
RationalMatrix lemma4_a1_inverse(std::size_t n);
RationalMatrix lemma4_a2_inverse(std::size_t n);

struct VerificationReport {
  bool passed = true;
  std::vector<std::string> checks;  // "ok ..." or "FAIL ..." lines
  std::string counterexample;       // first failing entry, if any
};

VerificationReport verify_family(const FamilySpec& spec, const Generated& generated);

}  // namespace milptd

#endif  // MILPTD_INSTANCES_HPP_
