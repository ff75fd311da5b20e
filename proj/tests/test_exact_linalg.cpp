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


#include <gtest/gtest.h>

#include <random>

#include "milptd/error.hpp"
#include "milptd/linalg.hpp"
#include "oracles.hpp"

namespace milptd {
namespace {

TEST(Rational, ParseAndCanonicalize) {
  EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_EQ(floor(make_rational(-3, 2)), -2);
  EXPECT_EQ(ceil(make_rational(-3, 2)), -1);
}

TEST(Determinant, SmallExamples) {
  EXPECT_EQ(mat_det(RationalMatrix{{2, -1}, {0, 2}}), 4);
  EXPECT_EQ(mat_det(RationalMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(mat_det(RationalMatrix(0, 0)), 1);
  EXPECT_THROW(mat_det(RationalMatrix(2, 3)), DimensionError);
}

TEST(Determinant, MatchesLeibnizOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const RationalMatrix a = oracle::random_matrix(rng, n, n, 3);
    EXPECT_EQ(mat_det(a), oracle::leibniz_det(a)) << a;
  }
}

TEST(Inverse, MatchesCofactorFormula) {
  std::mt19937_64 rng(11);
  int invertible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const RationalMatrix a = oracle::random_matrix(rng, n, n, 3);
    const auto want = oracle::cofactor_inverse(a);
    if (!want) {
      EXPECT_THROW(mat_inverse(a), SingularMatrixError);
      continue;
    }
    ++invertible;
    const RationalMatrix inv = mat_inverse(a);
    EXPECT_EQ(inv, *want) << a;
    EXPECT_TRUE((a * inv).is_identity());
    EXPECT_EQ(fractionality(inv), oracle::max_denominator(*want));
  }
  EXPECT_GT(invertible, 100);
}

TEST(Inverse, RationalEntries) {
  const RationalMatrix a{{make_rational(1, 2), 1}, {0, make_rational(2, 3)}};
  EXPECT_EQ(mat_inverse(a), (RationalMatrix{{2, -3}, {0, make_rational(3, 2)}}));
}

TEST(Fractionality, MaxDenominator) {
  const RationalMatrix m{{make_rational(1, 6), make_rational(3, 4)}, {5, 0}};
  EXPECT_EQ(fractionality(m), 6);
  EXPECT_EQ(common_denominator(m), 12);
  EXPECT_EQ(fractionality(RationalMatrix(0, 0)), 1);
}

TEST(Rank, IndependentRowsAndColumns) {
  const RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(independent_columns(m), (std::vector<std::size_t>{0, 1}));
  const auto rows = independent_rows(m);
  ASSERT_TRUE(rows);
  EXPECT_EQ(*rows, (std::vector<std::size_t>{0, 2}));
  const RationalVector consistent{1, 2, 0};
  EXPECT_TRUE(independent_rows(m, consistent));
  const RationalVector inconsistent{1, 3, 0};
  EXPECT_FALSE(independent_rows(m, inconsistent));
}

TEST(Solve, UniqueSystem) {
  const RationalMatrix m{{2, 1}, {1, 3}};
  const RationalVector rhs{3, 5};
  EXPECT_EQ(solve(m, rhs), (RationalVector{make_rational(4, 5), make_rational(7, 5)}));
}

TEST(MatrixText, ParseRoundTrip) {
  const RationalMatrix m{{1, make_rational(-1, 2)}, {0, 3}};
  EXPECT_EQ(parse_matrix(to_string(m)), m);
  EXPECT_EQ(parse_matrix("# comment\n1 2\n\n3 4\n"), (RationalMatrix{{1, 2}, {3, 4}}));
  EXPECT_THROW(parse_matrix("1 2\n3\n"), DimensionError);
  EXPECT_THROW(parse_matrix("1 q\n"), ParseError);
}

TEST(MatrixOps, StackingHandlesEmpty) {
  const RationalMatrix a{{1, 2}};
  EXPECT_EQ(hstack(RationalMatrix(1, 0), a), a);
  EXPECT_EQ(vstack(RationalMatrix(0, 2), a), a);
  EXPECT_EQ(block_diagonal(a, RationalMatrix(0, 0)), a);
  const RationalMatrix d = block_diagonal(RationalMatrix{{1}}, RationalMatrix{{2}});
  EXPECT_EQ(d, (RationalMatrix{{1, 0}, {0, 2}}));
}

}  // namespace
}  // namespace milptd
