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

#include "milptd/treedepth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "milptd/error.hpp"

namespace milptd {

TdDecomposition::TdDecomposition(std::vector<std::size_t> parent)
    : parent_(std::move(parent)), children_(parent_.size()) {
  const std::size_t n = parent_.size();
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t p = parent_[v];
    if (p == kNoParent) {
      roots_.push_back(v);
      continue;
    }
    if (p >= n || p == v) {
      throw ValidationError("invalid parent " + std::to_string(p) + " for vertex " +
                            std::to_string(v));
    }
    children_[p].push_back(v);
  }
  // Every vertex must reach a root within n steps.
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t u = v;
    std::size_t steps = 0;
    while (parent_[u] != kNoParent) {
      u = parent_[u];
      if (++steps > n) throw ValidationError("parent relation has a cycle");
    }
  }
}

TdDecomposition TdDecomposition::path(std::size_t n) {
  std::vector<std::size_t> parent(n);
  for (std::size_t v = 0; v < n; ++v) parent[v] = v == 0 ? kNoParent : v - 1;
  return TdDecomposition(std::move(parent));
}

bool TdDecomposition::is_ancestor(std::size_t ancestor, std::size_t v) const {
  for (std::size_t u = parent_[v]; u != kNoParent; u = parent_[u]) {
    if (u == ancestor) return true;
  }
  return false;
}

std::vector<std::size_t> TdDecomposition::subtree(std::size_t v) const {
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{v};
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (std::size_t c : children_[u]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Mask = std::uint64_t;

class ExactSearch {
 public:
  explicit ExactSearch(const Graph& g) : n_(g.vertex_count()), adj_(n_, 0) {
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t w : g.neighbors(v)) adj_[v] |= Mask{1} << w;
    }
  }

  TdDecomposition run() {
    std::vector<std::size_t> parent(n_, kNoParent);
    if (n_ > 0) {
      const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
      for (Mask comp : components(all)) {
        solve(comp);
        build(comp, kNoParent, parent);
      }
    }
    return TdDecomposition(std::move(parent));
  }

 private:
  struct Entry {
    int height;
    int root;
  };

  std::vector<Mask> components(Mask s) const {
    std::vector<Mask> out;
    while (s != 0) {
      Mask comp = s & (~s + 1);
      Mask frontier = comp;
      while (frontier != 0) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) {
          next |= adj_[std::countr_zero(f)];
        }
        next &= s & ~comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      s &= ~comp;
    }
    return out;
  }

  int solve(Mask s) {
    const int size = std::popcount(s);
    if (size == 1) return 1;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second.height;
    int best = size + 1;
    int best_root = -1;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask remaining = s & ~(Mask{1} << v);
      int h = 0;
      for (Mask comp : components(remaining)) {
        // This root can no longer beat the incumbent.
        if (h + 1 >= best) break;
        h = std::max(h, solve(comp));
      }
      if (1 + h < best) {
        best = 1 + h;
        best_root = v;
      }
    }
    memo_[s] = {best, best_root};
    return best;
  }

  void build(Mask s, std::size_t parent_vertex, std::vector<std::size_t>& parent) {
    int root;
    if (std::popcount(s) == 1) {
      root = std::countr_zero(s);
    } else {
      root = memo_.at(s).root;
    }
    parent[root] = parent_vertex;
    const Mask remaining = s & ~(Mask{1} << root);
    for (Mask comp : components(remaining)) {
      solve(comp);
      build(comp, static_cast<std::size_t>(root), parent);
    }
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  std::unordered_map<Mask, Entry> memo_;
};

// Components of g restricted to `alive`.
std::vector<std::vector<std::size_t>> components_within(
    const Graph& g, const std::vector<std::size_t>& vertices,
    const std::vector<bool>& alive) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> stack;
  for (std::size_t s : vertices) {
    if (!alive[s] || seen[s]) continue;
    std::vector<std::size_t> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::size_t w : g.neighbors(v)) {
        if (alive[w] && !seen[w]) {
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

std::size_t largest(const std::vector<std::vector<std::size_t>>& comps) {
  std::size_t best = 0;
  for (const auto& c : comps) best = std::max(best, c.size());
  return best;
}

void heuristic(const Graph& g, const std::vector<std::size_t>& vertices,
               std::size_t parent_vertex, std::vector<bool>& alive,
               std::vector<std::size_t>& parent) {
  if (vertices.size() == 1) {
    parent[vertices[0]] = parent_vertex;
    return;
  }
  std::vector<std::size_t> separator;
  auto comps = components_within(g, vertices, alive);
  // Grow the separator until no component holds more than half the vertices.
  while (!comps.empty() && 2 * largest(comps) > vertices.size()) {
    const auto big = std::max_element(
        comps.begin(), comps.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::size_t pick = kNoParent;
    std::size_t pick_largest = 0;
    std::size_t pick_degree = 0;
    for (std::size_t v : *big) {
      alive[v] = false;
      const std::size_t after = largest(components_within(g, *big, alive));
      alive[v] = true;
      std::size_t degree = 0;
      for (std::size_t w : g.neighbors(v)) degree += alive[w] ? 1 : 0;
      if (pick == kNoParent || after < pick_largest ||
          (after == pick_largest && degree < pick_degree)) {
        pick = v;
        pick_largest = after;
        pick_degree = degree;
      }
    }
    alive[pick] = false;
    separator.push_back(pick);
    comps = components_within(g, vertices, alive);
  }
  std::size_t top = parent_vertex;
  for (std::size_t v : separator) {
    parent[v] = top;
    top = v;
  }
  for (const auto& comp : comps) heuristic(g, comp, top, alive, parent);
}

}  // namespace

TdDecomposition td_compute(const Graph& g, TdMode mode, std::size_t exact_cap) {
  if (!is_connected(g)) {
    throw ValidationError("td_compute needs a connected graph; split components first");
  }
  const std::size_t n = g.vertex_count();
  if (mode == TdMode::kExact) {
    if (n > exact_cap || n > 64) {
      throw CapExceededError("exact treedepth search limited to " +
                             std::to_string(std::min<std::size_t>(exact_cap, 64)) +
                             " vertices, graph has " + std::to_string(n));
    }
    return ExactSearch(g).run();
  }
  std::vector<std::size_t> parent(n, kNoParent);
  if (n > 0) {
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = v;
    heuristic(g, all, kNoParent, alive, parent);
  }
  return TdDecomposition(std::move(parent));
}

TdDecomposition td_decompose(const Graph& g, std::size_t exact_cap) {
  std::vector<std::size_t> parent(g.vertex_count(), kNoParent);
  for (const auto& comp : connected_components(g)) {
    const Graph sub = induced_subgraph(g, comp);
    const TdMode mode = comp.size() <= exact_cap ? TdMode::kExact : TdMode::kHeuristic;
    const TdDecomposition local = td_compute(sub, mode, exact_cap);
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const std::size_t p = local.parent(k);
      parent[comp[k]] = p == kNoParent ? kNoParent : comp[p];
    }
  }
  return TdDecomposition(std::move(parent));
}

bool validate_td(const Graph& g, const TdDecomposition& f) {
  if (g.vertex_count() != f.vertex_count()) {
    throw DimensionError("graph has " + std::to_string(g.vertex_count()) +
                         " vertices, decomposition has " +
                         std::to_string(f.vertex_count()));
  }
  for (const auto& [u, v] : g.edges()) {
    if (!f.is_ancestor(u, v) && !f.is_ancestor(v, u)) return false;
  }
  return true;
}

TdStats td_stats(const TdDecomposition& f) {
  TdStats stats;
  std::vector<std::size_t> path;
  for (std::size_t leaf = 0; leaf < f.vertex_count(); ++leaf) {
    if (!f.children(leaf).empty()) continue;
    path.clear();
    for (std::size_t u = leaf; u != kNoParent; u = f.parent(u)) path.push_back(u);
    std::reverse(path.begin(), path.end());
    stats.height = std::max(stats.height, path.size());
    std::vector<std::size_t> segments;
    std::size_t run = 0;
    for (std::size_t u : path) {
      ++run;
      if (f.children(u).size() != 1) {
        segments.push_back(run);
        run = 0;
      }
    }
    if (segments.size() > stats.level_heights.size()) {
      stats.level_heights.resize(segments.size(), 0);
    }
    for (std::size_t i = 0; i < segments.size(); ++i) {
      stats.level_heights[i] = std::max(stats.level_heights[i], segments[i]);
    }
  }
  stats.topological_height = stats.level_heights.size();
  return stats;
}

TdDecomposition restrict_decomposition(const TdDecomposition& f,
                                       std::span<const std::size_t> vertices) {
  std::vector<std::size_t> local(f.vertex_count(), kNoParent);
  for (std::size_t k = 0; k < vertices.size(); ++k) local[vertices[k]] = k;
  std::vector<std::size_t> parent(vertices.size(), kNoParent);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    for (std::size_t u = f.parent(vertices[k]); u != kNoParent; u = f.parent(u)) {
      if (local[u] != kNoParent) {
        parent[k] = local[u];
        break;
      }
    }
  }
  return TdDecomposition(std::move(parent));
}

TdDecomposition graft_path_above(const TdDecomposition& f, std::size_t length) {
  std::vector<std::size_t> parent(length + f.vertex_count(), kNoParent);
  for (std::size_t v = 1; v < length; ++v) parent[v] = v - 1;
  const std::size_t anchor = length == 0 ? kNoParent : length - 1;
  for (std::size_t v = 0; v < f.vertex_count(); ++v) {
    const std::size_t p = f.parent(v);
    parent[length + v] = p == kNoParent ? anchor : length + p;
  }
  return TdDecomposition(std::move(parent));
}

std::string to_string(const TdDecomposition& f) {
  std::string out;
  for (std::size_t v = 0; v < f.vertex_count(); ++v) {
    if (v > 0) out += ' ';
    out += f.is_root(v) ? std::string("-") : std::to_string(f.parent(v));
  }
  return out;
}

}  // namespace milptd
