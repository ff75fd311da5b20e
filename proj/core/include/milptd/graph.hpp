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

#ifndef MILPTD_GRAPH_HPP_
#define MILPTD_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "milptd/matrix.hpp"

namespace milptd {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;

  // Adds {u, v}; duplicates are ignored. Throws on self-loops or
  // out-of-range endpoints.
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;

  const std::vector<std::size_t>& neighbors(std::size_t v) const {
    return adjacency_[v];
  }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }

  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
};

// One vertex per column; {i, j} is an edge iff some row is nonzero in both.
Graph primal_graph(const RationalMatrix& a);

// primal_graph of the transpose: one vertex per row.
Graph dual_graph(const RationalMatrix& a);

// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Subgraph induced by `vertices`; vertex k of the result is vertices[k].
Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
// Star with center 0 and leaves 1..leaves.
Graph star_graph(std::size_t leaves);

// Debug dump: one "u v" line per edge, sorted.
std::string dump_edges(const Graph& g);

}  // namespace milptd

#endif  // MILPTD_GRAPH_HPP_
