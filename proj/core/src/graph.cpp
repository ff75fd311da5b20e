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

#include "milptd/graph.hpp"

#include <algorithm>

#include "milptd/error.hpp"

namespace milptd {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : adjacency_(vertex_count) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency_) twice += nb.size();
  return twice / 2;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw DimensionError("self-loop on vertex " + std::to_string(u));
  if (u >= vertex_count() || v >= vertex_count()) {
    throw DimensionError("edge endpoint out of range");
  }
  auto insert = [](std::vector<std::size_t>& list, std::size_t x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert(adjacency_[u], v);
  insert(adjacency_[v], u);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (std::size_t v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph primal_graph(const RationalMatrix& a) {
  Graph g(a.cols());
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    support.clear();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) support.push_back(j);
    }
    for (std::size_t x = 0; x < support.size(); ++x) {
      for (std::size_t y = x + 1; y < support.size(); ++y) {
        g.add_edge(support[x], support[y]);
      }
    }
  }
  return g;
}

Graph dual_graph(const RationalMatrix& a) { return primal_graph(a.transpose()); }

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::size_t w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices) {
  std::vector<std::size_t> local(g.vertex_count(), g.vertex_count());
  for (std::size_t k = 0; k < vertices.size(); ++k) local[vertices[k]] = k;
  Graph sub(vertices.size());
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    for (std::size_t w : g.neighbors(vertices[k])) {
      if (local[w] != g.vertex_count() && local[w] > k) sub.add_edge(k, local[w]);
    }
  }
  return sub;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

std::string dump_edges(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace milptd
