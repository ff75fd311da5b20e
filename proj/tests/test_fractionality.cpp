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

#include <functional>
#include <random>

#include "milptd/error.hpp"
#include "milptd/fractionality.hpp"
#include "milptd/graph.hpp"
#include "milptd/instances.hpp"
#include "milptd/linalg.hpp"
#include "oracles.hpp"

namespace milptd {
namespace {

// Largest fr(A_B^-1) over invertible square column submatrices A_B of a
// row-independent matrix, by enumerating column subsets.
BigInt empirical_max(const RationalMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  BigInt best = 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != m) continue;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) cols.push_back(j);
    }
    const auto inv = oracle::cofactor_inverse(a.select_cols(cols));
    if (inv) best = std::max(best, oracle::max_denominator(*inv));
  }
  return best;
}

TEST(StructuredInverse, MatchesDirectInverse) {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 80) {
    const std::size_t n = 1 + rng() % 8;
    RationalMatrix a = oracle::random_matrix(rng, n, n, 3);
    // Sparsify so the decompositions have structure.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (rng() % 3 == 0) a(i, j) = 0;
      }
    }
    if (mat_det(a) == 0) continue;
    const TdDecomposition f = td_decompose(primal_graph(a));
    const StructuredInverse s = structured_inverse(a, f);
    const RationalMatrix direct = mat_inverse(a);
    EXPECT_EQ(s.inverse, direct) << a;
    EXPECT_EQ(replay(s.trace), direct) << a;
    ++checked;
  }
}

TEST(StructuredInverse, StarWithOneStrictBlock) {
  // Column 0 is the border. Block {1} has two rows (strict, goes to Q1);
  // block {2} is square (goes to Q2).
  const RationalMatrix a{{1, 2, 0}, {1, 0, 1}, {2, 1, 0}};
  const TdDecomposition f({kNoParent, 0, 0});
  ASSERT_TRUE(validate_td(primal_graph(a), f));
  const StructuredInverse s = structured_inverse(a, f);
  EXPECT_EQ(s.inverse, mat_inverse(a));
  EXPECT_EQ(s.inverse, *oracle::cofactor_inverse(a));
  EXPECT_EQ(s.trace.kind, StructuredInverseTrace::Kind::kSplit);
}

// Draws rows along root paths of a fixed two-level branching tree, so the
// recursion splits at the root and again inside each block.
TEST(StructuredInverse, NestedSplitsAndPeels) {
  const TdDecomposition f({kNoParent, 0, 1, 1, 0, 4, 4, 4});
  const std::size_t n = f.vertex_count();
  std::mt19937_64 rng(41);
  std::size_t nested = 0, multi_peel = 0, checked = 0;
  std::function<void(const StructuredInverseTrace&, std::size_t)> walk =
      [&](const StructuredInverseTrace& t, std::size_t depth) {
        if (t.kind == StructuredInverseTrace::Kind::kSplit) {
          if (depth > 0) ++nested;
          if (t.peels.size() >= 2) ++multi_peel;
        }
        for (const auto& c : t.children) walk(c, depth + (t.kind == StructuredInverseTrace::Kind::kSplit));
        for (const auto& p : t.peels) {
          if (p.basis_trace) walk(*p.basis_trace, depth + 1);
        }
      };
  for (int trial = 0; trial < 3000; ++trial) {
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t v = rng() % n;
      a(i, v) = 1 + static_cast<long>(rng() % 3);
      for (std::size_t u = f.parent(v); u != kNoParent; u = f.parent(u)) {
        if (rng() % 2) a(i, u) = static_cast<long>(rng() % 7) - 3;
      }
    }
    if (mat_det(a) == 0) continue;
    const StructuredInverse s = structured_inverse(a, f);
    ASSERT_EQ(s.inverse, mat_inverse(a)) << a;
    ASSERT_EQ(replay(s.trace), s.inverse) << a;
    walk(s.trace, 0);
    ++checked;
  }
  EXPECT_GE(checked, 50u);
  EXPECT_GT(nested, 0u);
  EXPECT_GT(multi_peel, 0u);
}

TEST(StructuredInverse, Lemma4Path) {
  for (std::size_t n = 2; n <= 8; ++n) {
    FamilySpec spec;
    spec.n = n;
    const RationalMatrix a = std::get<RationalMatrix>(generate(spec));
    const StructuredInverse s = structured_inverse(a, td_decompose(primal_graph(a)));
    EXPECT_EQ(s.inverse, lemma4_a1_inverse(n));
    EXPECT_EQ(fractionality(s.inverse), BigInt(1) << n);
  }
}

TEST(StructuredInverse, Errors) {
  EXPECT_THROW(structured_inverse(RationalMatrix(2, 3), TdDecomposition::path(3)),
               DimensionError);
  const RationalMatrix singular{{1, 1}, {1, 1}};
  EXPECT_THROW(structured_inverse(singular, TdDecomposition::path(2)), SingularMatrixError);
  const RationalMatrix dense{{1, 1}, {1, 2}};
  EXPECT_THROW(structured_inverse(dense, TdDecomposition({kNoParent, kNoParent})),
               ValidationError);
  const StructuredInverse empty = structured_inverse(RationalMatrix(0, 0), TdDecomposition());
  EXPECT_EQ(empty.inverse.rows(), 0u);
}

TEST(Certificate, SoundOnRandomSmallMatrices) {
  std::mt19937_64 rng(23);
  int exact = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + rng() % 3;
    const std::size_t n = m + rng() % 3;
    RationalMatrix a = oracle::random_matrix(rng, m, n, 2);
    if (rank(a) != m) continue;
    const TdDecomposition f = td_decompose(primal_graph(a));
    const BigInt emp = empirical_max(a);
    try {
      const FractionalityCertificate c = frac_bound(a, f, Side::kPrimal, 4096);
      EXPECT_LE(emp, c.bound) << a;
      ++exact;
    } catch (const CapExceededError& e) {
      EXPECT_GE(e.log2_estimate(), log2_abs(emp));
    }
  }
  EXPECT_GT(exact, 0);
}

TEST(Certificate, BasePathCase) {
  // ttd 1, height 1: a single column with entries up to a.
  const RationalMatrix a{{2}, {-1}};
  const FractionalityCertificate dual = frac_bound(a, TdDecomposition::path(2), Side::kDual);
  EXPECT_EQ(dual.method, "generic");
  EXPECT_GE(dual.bound, 2);
  const FractionalityCertificate primal =
      frac_bound(RationalMatrix{{3}}, TdDecomposition::path(1), Side::kPrimal);
  EXPECT_EQ(primal.bound, 3);
}

TEST(Certificate, Lemma4Exceeded) {
  FamilySpec spec;
  spec.n = 6;
  const RationalMatrix a = std::get<RationalMatrix>(generate(spec));
  const TdDecomposition f = td_decompose(primal_graph(a));
  try {
    const FractionalityCertificate c = frac_bound(a, f, Side::kPrimal);
    EXPECT_GE(c.bound, 64);
  } catch (const CapExceededError& e) {
    EXPECT_GE(e.log2_estimate(), 6.0L);
  }
}

TEST(Certificate, Errors) {
  const RationalMatrix frac{{make_rational(1, 2)}};
  EXPECT_THROW(frac_bound(frac, TdDecomposition::path(1), Side::kPrimal), ValidationError);
  const RationalMatrix dense{{1, 1}};
  EXPECT_THROW(frac_bound(dense, TdDecomposition({kNoParent, kNoParent}), Side::kPrimal),
               ValidationError);
}

TEST(SpecialCertificate, ClosedFormValues) {
  EXPECT_EQ(frac_bound_special(1, 1, SpecialFamily::kTwoStage).bound, 1);
  EXPECT_EQ(frac_bound_special(2, 1, SpecialFamily::kTwoStage).bound, 4);
  EXPECT_EQ(frac_bound_special(2, 2, SpecialFamily::kNFold).bound, 2048);
  EXPECT_EQ(frac_bound_special(2, 2, SpecialFamily::kNFold).side, Side::kDual);
  EXPECT_EQ(frac_bound_special(2, 2, SpecialFamily::kTwoStage).side, Side::kPrimal);
  EXPECT_THROW(frac_bound_special(50, 40, SpecialFamily::kNFold, 64), CapExceededError);
}

// Every 2-stage matrix with two 1 x 1 bricks and nonzero entries in
// [-2, 2]: the observed maximum fractionality never exceeds the closed
// form for t = 1, a = 2, and attains it.
TEST(SpecialCertificate, ExhaustiveTwoStageT1) {
  const BigInt bound = frac_bound_special(2, 1, SpecialFamily::kTwoStage).bound;
  const std::vector<long> values{-2, -1, 1, 2};
  BigInt seen = 1;
  for (int code = 0; code < 256; ++code) {
    int c = code;
    auto next = [&] {
      const long v = values[c % 4];
      c /= 4;
      return v;
    };
    RationalMatrix a(2, 3);
    a(0, 0) = next();
    a(0, 1) = next();
    a(1, 0) = next();
    a(1, 2) = next();
    seen = std::max(seen, empirical_max(a));
  }
  EXPECT_LE(seen, bound);
  EXPECT_EQ(seen, bound);
}

TEST(BoundValue, Formatting) {
  BoundValue v;
  v.value = 12;
  EXPECT_EQ(v.str(), "12");
  v.exact = false;
  v.log2 = 3.5L;
  EXPECT_NE(v.str().find("2^"), std::string::npos);
}

}  // namespace
}  // namespace milptd
