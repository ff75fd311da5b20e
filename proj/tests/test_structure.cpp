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

#include <cmath>
#include <random>

#include "milptd/error.hpp"
#include "milptd/graph.hpp"
#include "milptd/treedepth.hpp"
#include "oracles.hpp"

namespace milptd {
namespace {

std::size_t height_of(const TdDecomposition& f) { return td_stats(f).height; }

Graph random_graph(std::mt19937_64& rng, std::size_t n, unsigned percent) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng() % 100 < percent) g.add_edge(u, v);
    }
  }
  return g;
}

TEST(Graphs, PrimalAndDual) {
  const RationalMatrix a{{1, 1, 0}, {0, 0, 1}};
  const Graph p = primal_graph(a);
  EXPECT_EQ(p.vertex_count(), 3u);
  EXPECT_EQ(p.edges(), (std::vector<Edge>{{0, 1}}));
  const Graph d = dual_graph(a);
  EXPECT_EQ(d.vertex_count(), 2u);
  EXPECT_EQ(d.edge_count(), 0u);
  EXPECT_EQ(connected_components(p).size(), 2u);
}

TEST(Treedepth, KnownValues) {
  for (std::size_t k = 1; k <= 6; ++k) {
    EXPECT_EQ(height_of(td_compute(complete_graph(k), TdMode::kExact)), k);
  }
  EXPECT_EQ(height_of(td_compute(star_graph(5), TdMode::kExact)), 2u);
  for (std::size_t n = 1; n <= 15; ++n) {
    const auto want = static_cast<std::size_t>(std::ceil(std::log2(n + 1.0)));
    EXPECT_EQ(height_of(td_compute(path_graph(n), TdMode::kExact)), want) << n;
  }
  EXPECT_EQ(height_of(td_compute(Graph(0), TdMode::kExact)), 0u);
}

TEST(Treedepth, ExactMatchesSubsetDp) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const Graph g = random_graph(rng, n, 30 + rng() % 40);
    const TdDecomposition f = td_decompose(g, 16);
    EXPECT_TRUE(validate_td(g, f));
    EXPECT_EQ(height_of(f), oracle::SubsetTreedepth(g).treedepth()) << dump_edges(g);
  }
}

TEST(Treedepth, HeuristicIsValidAndNotBelowExact) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 24;
    const Graph g = random_graph(rng, n, 10 + rng() % 30);
    // A cap of 0 sends every component to the heuristic.
    const TdDecomposition h = td_decompose(g, 0);
    EXPECT_TRUE(validate_td(g, h));
    if (n <= 12) {
      EXPECT_GE(height_of(h), height_of(td_decompose(g, 16)));
    }
  }
}

TEST(Treedepth, ComputeNeedsConnectedGraph) {
  EXPECT_THROW(td_compute(Graph(2), TdMode::kExact), ValidationError);
  EXPECT_THROW(td_compute(path_graph(17), TdMode::kExact, 16), CapExceededError);
  const TdDecomposition h = td_compute(path_graph(31), TdMode::kHeuristic);
  EXPECT_TRUE(validate_td(path_graph(31), h));
}

TEST(Treedepth, DecomposeSwitchesOnCap) {
  const Graph g = path_graph(20);
  const TdDecomposition f = td_decompose(g, 16);
  EXPECT_TRUE(validate_td(g, f));
  EXPECT_GE(height_of(f), 5u);
}

TEST(Treedepth, ValidateRejectsBadForest) {
  const Graph g = path_graph(3);
  EXPECT_TRUE(validate_td(g, TdDecomposition::path(3)));
  // Star rooted at 0 misses edge {1, 2}.
  EXPECT_FALSE(validate_td(g, TdDecomposition({kNoParent, 0, 0})));
  EXPECT_THROW(validate_td(g, TdDecomposition::path(2)), DimensionError);
  EXPECT_THROW(TdDecomposition({1, 0}), ValidationError);
}

TEST(TdStats, LevelHeights) {
  // Path 0-1, branching at 1 into leaves 2 and the path 3-4.
  const TdDecomposition f({kNoParent, 0, 1, 1, 3});
  const TdStats s = td_stats(f);
  EXPECT_EQ(s.height, 4u);
  EXPECT_EQ(s.topological_height, 2u);
  EXPECT_EQ(s.level_heights, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(td_stats(TdDecomposition::path(5)).topological_height, 1u);
  EXPECT_EQ(td_stats(TdDecomposition()).height, 0u);
}

TEST(TdStats, RestrictAndGraft) {
  const TdDecomposition f({kNoParent, 0, 1, 1, 3});
  const std::vector<std::size_t> keep{0, 2, 4};
  const TdDecomposition r = restrict_decomposition(f, keep);
  EXPECT_EQ(r.vertex_count(), 3u);
  EXPECT_EQ(r.parent(1), 0u);
  EXPECT_EQ(r.parent(2), 0u);
  const TdDecomposition g = graft_path_above(TdDecomposition::path(2), 2);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(td_stats(g).height, 4u);
}

}  // namespace
}  // namespace milptd
