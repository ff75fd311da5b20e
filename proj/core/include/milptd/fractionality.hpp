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

#ifndef MILPTD_FRACTIONALITY_HPP_
#define MILPTD_FRACTIONALITY_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "milptd/matrix.hpp"
#include "milptd/rational.hpp"
#include "milptd/treedepth.hpp"

namespace milptd {

enum class Side { kPrimal, kDual };

const char* to_string(Side side);

// ---------------------------------------------------------------------------
// Structured inverse
// ---------------------------------------------------------------------------

struct StructuredInverseTrace;

// One elimination step on the strict part Q1. The step's matrix Q has its
// first `carried` columns inherited from the border, followed by the
// current block's columns and then the remaining blocks. With the columns
// reordered as (basis, N, rest):
//   E2 * E1 * Q * E3 = diag(I, Q'')   and   Q' = beta * Q''.
struct PeelStep {
  std::size_t carried = 0;
  std::size_t block_rows = 0;
  std::size_t block_cols = 0;
  std::vector<std::size_t> basis;  // invertible column set, local to Q
  std::vector<std::size_t> order;  // (basis, N, rest) as a column permutation
  RationalMatrix e1;               // diag(B^-1, I)
  RationalMatrix e2;               // (I 0; -X I)
  RationalMatrix e3;               // (I -W; 0 I), W = B^-1 N
  BigInt beta;
  BigInt basis_fractionality;      // fr(B^-1)
  std::shared_ptr<StructuredInverseTrace> basis_trace;
};

struct BlockSplit {
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool strict = false;  // rows > cols, so the block belongs to Q1
};

struct StructuredInverseTrace {
  enum class Kind { kEmpty, kDirect, kComponents, kSplit };

  Kind kind = Kind::kEmpty;
  std::size_t size = 0;
  TdStats stats;

  // kDirect: the base-case inverse.
  RationalMatrix direct_inverse;

  // kComponents and kSplit: A[row_order, col_order] is block structured.
  std::vector<std::size_t> row_order;
  std::vector<std::size_t> col_order;
  // kComponents: one child per tree. kSplit: one child per Q2 block.
  std::vector<StructuredInverseTrace> children;

  // kSplit only.
  std::size_t k1 = 0;
  std::size_t r_prime = 0;  // number of strict blocks
  std::size_t q1_size = 0;
  std::vector<BlockSplit> blocks;
  RationalMatrix s;        // A[Q2 rows, Q1 cols]
  RationalMatrix r_prime_matrix;  // -Q2^-1 S Q1^-1
  std::vector<PeelStep> peels;
};

struct StructuredInverse {
  RationalMatrix inverse;
  StructuredInverseTrace trace;
};

// Inverts A_B along the block recursion induced by F: direct inversion when
// ttd(F) <= 1, otherwise a Q1/Q2 split with Q2 inverted block by block and
// Q1 eliminated one strict block at a time. Throws DimensionError for
// non-square input, ValidationError when F does not validate against
// G_P(A_B), and SingularMatrixError when A_B is singular.
StructuredInverse structured_inverse(const RationalMatrix& a_b,
                                     const TdDecomposition& f);

// Recomputes the inverse from the recorded factors alone.
RationalMatrix replay(const StructuredInverseTrace& trace);

std::string to_string(const StructuredInverseTrace& trace);

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultBitCap = 1000000;

// A bound value. Exact while it fits the bit cap; past the cap only the
// base-2 logarithm is tracked (possibly +inf).
struct BoundValue {
  bool exact = true;
  BigInt value = 1;
  long double log2 = 0;

  std::string str() const;
};

// One evaluated class (height, ttd, size, magnitude) of the recursion.
struct CertificateLevel {
  std::size_t height = 0;
  std::size_t ttd = 0;
  std::size_t size = 0;
  std::size_t level_height = 0;  // largest border k1 admitted by the class
  BoundValue magnitude;          // entry bound of the class
  BoundValue bound;              // fractionality bound of inverses
  BoundValue inverse_magnitude;  // entry bound of inverses
  BoundValue base_bound;         // Hadamard term, ttd == 1 only
  BoundValue q1_bound;
  BoundValue q2_bound;
  BoundValue r_prime_bound;
  std::vector<BoundValue> betas;
};

struct FractionalityCertificate {
  Side side = Side::kPrimal;
  std::string method;    // "generic" or "special"
  std::string constant;  // closed form used by the special certificate
  BigInt bound = 1;
  long double log2_bound = 0;
  std::size_t bit_cap = kDefaultBitCap;
  TdStats stats;
  std::size_t size = 0;
  BigInt magnitude = 0;
  std::vector<CertificateLevel> trace;
};

// Bound B with fr(A_B^-1) <= B for every invertible square column
// submatrix A_B of A (of A^T for the dual side). A must be integral and F
// must validate against the chosen side's primal graph. Throws
// CapExceededError, carrying a log2 estimate of the bound, when it needs
// more than bit_cap bits.
FractionalityCertificate frac_bound(const RationalMatrix& a, const TdDecomposition& f,
                                    Side side, std::size_t bit_cap = kDefaultBitCap);

enum class SpecialFamily { kNFold, kTwoStage };

// Closed-form certificate for 2-stage matrices with t first-stage columns
// and second-stage bricks of at most t x t (and their n-fold transposes):
//   (t a)^(t^2) * isqrt((t a^2)^t).
FractionalityCertificate frac_bound_special(const BigInt& a, std::size_t t,
                                            SpecialFamily family,
                                            std::size_t bit_cap = kDefaultBitCap);

std::string to_string(const FractionalityCertificate& cert);

}  // namespace milptd

#endif  // MILPTD_FRACTIONALITY_HPP_
