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

#ifndef MILPTD_TREEDEPTH_HPP_
#define MILPTD_TREEDEPTH_HPP_

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "milptd/graph.hpp"

namespace milptd {

inline constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kDefaultExactTdCap = 16;

// Rooted forest given by a parent array; roots have parent kNoParent.
// Children lists are kept sorted by vertex index.
class TdDecomposition {
 public:
  TdDecomposition() = default;
  // Throws ValidationError if the parent relation has a cycle or points
  // out of range.
  explicit TdDecomposition(std::vector<std::size_t> parent);

  // The path 0 - 1 - ... - (n-1) rooted at 0.
  static TdDecomposition path(std::size_t n);

  std::size_t vertex_count() const { return parent_.size(); }
  std::size_t parent(std::size_t v) const { return parent_[v]; }
  bool is_root(std::size_t v) const { return parent_[v] == kNoParent; }
  const std::vector<std::size_t>& parents() const { return parent_; }
  const std::vector<std::size_t>& children(std::size_t v) const {
    return children_[v];
  }
  const std::vector<std::size_t>& roots() const { return roots_; }

  bool is_ancestor(std::size_t ancestor, std::size_t v) const;
  // Vertices of the subtree rooted at v, ascending.
  std::vector<std::size_t> subtree(std::size_t v) const;

  friend bool operator==(const TdDecomposition& a, const TdDecomposition& b) {
    return a.parent_ == b.parent_;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> roots_;
};

enum class TdMode { kExact, kHeuristic };

// Decomposition of a connected graph. Exact mode finds a minimum-height
// decomposition by root-choice search memoized over vertex subsets (ties go
// to the lowest vertex index) and throws CapExceededError when the graph has
// more than exact_cap vertices. Heuristic mode peels a greedily grown
// balanced separator, stacks it as a path, and recurses on the remaining
// components. Throws ValidationError for disconnected input.
TdDecomposition td_compute(const Graph& g, TdMode mode,
                           std::size_t exact_cap = kDefaultExactTdCap);

// Forest decomposition of an arbitrary graph: each component is solved
// exactly when it has at most exact_cap vertices, heuristically otherwise.
TdDecomposition td_decompose(const Graph& g,
                             std::size_t exact_cap = kDefaultExactTdCap);

// True iff every edge of g joins an ancestor-descendant pair of f. Throws
// DimensionError on a vertex count mismatch.
bool validate_td(const Graph& g, const TdDecomposition& f);

struct TdStats {
  std::size_t height = 0;
  std::size_t topological_height = 0;
  // k_1 .. k_ttd; k_i is the largest i-th segment over root-leaf paths,
  // where segments end at non-degenerate vertices (leaves or branchings).
  std::vector<std::size_t> level_heights;

  friend bool operator==(const TdStats&, const TdStats&) = default;
};

TdStats td_stats(const TdDecomposition& f);

// Forest induced on `vertices` (each vertex's parent becomes its nearest
// kept ancestor). Vertex k of the result is vertices[k].
TdDecomposition restrict_decomposition(const TdDecomposition& f,
                                       std::span<const std::size_t> vertices);

// Prepends a path of `length` fresh vertices (0 .. length-1, rooted at 0)
// above every root of f; f's vertices are shifted by `length`.
TdDecomposition graft_path_above(const TdDecomposition& f, std::size_t length);

// Parent list, e.g. "- 0 1 1" (roots print as '-').
std::string to_string(const TdDecomposition& f);

}  // namespace milptd

#endif  // MILPTD_TREEDEPTH_HPP_
