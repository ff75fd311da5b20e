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

#include "milptd/block_structure.hpp"

#include <numeric>

#include "milptd/error.hpp"
#include "milptd/graph.hpp"

namespace milptd {

BlockStructure primal_decompose(const RationalMatrix& a, const TdDecomposition& f) {
  if (f.vertex_count() != a.cols()) {
    throw ValidationError("decomposition has " + std::to_string(f.vertex_count()) +
                          " vertices but the matrix has " + std::to_string(a.cols()) +
                          " columns");
  }
  if (!validate_td(primal_graph(a), f)) {
    throw ValidationError("decomposition does not validate against the primal graph");
  }
  if (f.roots().size() != 1) {
    throw ValidationError("primal decomposition needs a single tree, got " +
                          std::to_string(f.roots().size()) + " roots");
  }

  BlockStructure out;
  out.rows = a.rows();
  out.cols = a.cols();
  std::size_t v = f.roots().front();
  out.border_columns.push_back(v);
  while (f.children(v).size() == 1) {
    v = f.children(v).front();
    out.border_columns.push_back(v);
  }
  out.k1 = out.border_columns.size();

  std::vector<std::vector<std::size_t>> block_cols;
  for (std::size_t c : f.children(v)) block_cols.push_back(f.subtree(c));
  if (block_cols.empty()) block_cols.emplace_back();

  std::vector<std::size_t> owner(a.cols(), kNoParent);
  for (std::size_t i = 0; i < block_cols.size(); ++i) {
    for (std::size_t c : block_cols[i]) owner[c] = i;
  }

  std::vector<std::vector<std::size_t>> block_rows(block_cols.size());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::size_t block = kNoParent;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) == 0 || owner[c] == kNoParent) continue;
      if (block == kNoParent) {
        block = owner[c];
      } else if (block != owner[c]) {
        throw InvariantError("row " + std::to_string(r) + " spans two subtrees");
      }
    }
    block_rows[block == kNoParent ? 0 : block].push_back(r);
  }

  for (std::size_t i = 0; i < block_cols.size(); ++i) {
    Block blk;
    blk.row_map = block_rows[i];
    blk.column_map = block_cols[i];
    blk.border = a.select(blk.row_map, out.border_columns);
    blk.diagonal = a.select(blk.row_map, blk.column_map);
    blk.child = restrict_decomposition(f, blk.column_map);
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

std::vector<HattedBlock> hatted_blocks(const BlockStructure& b) {
  std::vector<HattedBlock> out;
  out.reserve(b.blocks.size());
  for (const auto& blk : b.blocks) {
    out.push_back({hstack(blk.border, blk.diagonal), graft_path_above(blk.child, b.k1)});
  }
  return out;
}

RationalMatrix assemble(const BlockStructure& b) {
  RationalMatrix a(b.rows, b.cols);
  for (const auto& blk : b.blocks) {
    for (std::size_t i = 0; i < blk.row_map.size(); ++i) {
      for (std::size_t j = 0; j < b.k1; ++j) {
        a(blk.row_map[i], b.border_columns[j]) = blk.border(i, j);
      }
      for (std::size_t j = 0; j < blk.column_map.size(); ++j) {
        a(blk.row_map[i], blk.column_map[j]) = blk.diagonal(i, j);
      }
    }
  }
  return a;
}

RationalMatrix block_display(const BlockStructure& b) {
  RationalMatrix d(b.rows, b.cols);
  std::size_t row = 0;
  std::size_t col = b.k1;
  for (const auto& blk : b.blocks) {
    for (std::size_t i = 0; i < blk.row_map.size(); ++i) {
      for (std::size_t j = 0; j < b.k1; ++j) d(row + i, j) = blk.border(i, j);
      for (std::size_t j = 0; j < blk.column_map.size(); ++j) {
        d(row + i, col + j) = blk.diagonal(i, j);
      }
    }
    row += blk.row_map.size();
    col += blk.column_map.size();
  }
  return d;
}

namespace {

std::string list(const std::vector<std::size_t>& ids) {
  std::string out = "[";
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(ids[k]);
  }
  return out + "]";
}

std::vector<std::size_t> map_ids(const std::vector<std::size_t>& local,
                                 const std::vector<std::size_t>& global) {
  std::vector<std::size_t> out;
  out.reserve(local.size());
  for (std::size_t k : local) out.push_back(global[k]);
  return out;
}

void trace_tree(const RationalMatrix& a, const TdDecomposition& f,
                const std::vector<std::size_t>& row_ids,
                const std::vector<std::size_t>& col_ids, std::size_t depth,
                std::string& out);

void trace_forest(const RationalMatrix& a, const TdDecomposition& f,
                  const std::vector<std::size_t>& row_ids,
                  const std::vector<std::size_t>& col_ids, std::size_t depth,
                  std::string& out) {
  if (f.roots().size() == 1) {
    trace_tree(a, f, row_ids, col_ids, depth, out);
    return;
  }
  const std::string pad(2 * depth, ' ');
  out += pad + "forest trees=" + std::to_string(f.roots().size()) + "\n";
  for (std::size_t root : f.roots()) {
    const std::vector<std::size_t> cols = f.subtree(root);
    std::vector<bool> in_tree(a.cols(), false);
    for (std::size_t c : cols) in_tree[c] = true;
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      bool touches = false;
      for (std::size_t c = 0; c < a.cols(); ++c) {
        if (a(r, c) != 0 && in_tree[c]) touches = true;
      }
      if (touches) rows.push_back(r);
    }
    trace_tree(a.select(rows, cols), restrict_decomposition(f, cols),
               map_ids(rows, row_ids), map_ids(cols, col_ids), depth + 1, out);
  }
}

void trace_tree(const RationalMatrix& a, const TdDecomposition& f,
                const std::vector<std::size_t>& row_ids,
                const std::vector<std::size_t>& col_ids, std::size_t depth,
                std::string& out) {
  const std::string pad(2 * depth, ' ');
  const TdStats stats = td_stats(f);
  const BlockStructure b = primal_decompose(a, f);
  out += pad + "node rows=" + std::to_string(a.rows()) + " cols=" +
         std::to_string(a.cols()) + " height=" + std::to_string(stats.height) +
         " ttd=" + std::to_string(stats.topological_height) +
         " k1=" + std::to_string(b.k1) + " d=" + std::to_string(b.blocks.size()) +
         " border=" + list(map_ids(b.border_columns, col_ids)) + "\n";
  for (std::size_t i = 0; i < b.blocks.size(); ++i) {
    const Block& blk = b.blocks[i];
    out += pad + "  block " + std::to_string(i) + " m=" +
           std::to_string(blk.row_map.size()) + " n=" +
           std::to_string(blk.column_map.size()) + " rows=" +
           list(map_ids(blk.row_map, row_ids)) + " cols=" +
           list(map_ids(blk.column_map, col_ids)) + "\n";
    if (!blk.column_map.empty()) {
      trace_forest(blk.diagonal, blk.child, map_ids(blk.row_map, row_ids),
                   map_ids(blk.column_map, col_ids), depth + 2, out);
    }
  }
}

}  // namespace

std::string trace_text(const RationalMatrix& a, const TdDecomposition& f) {
  if (f.vertex_count() != a.cols()) {
    throw ValidationError("decomposition size does not match the column count");
  }
  std::string out;
  if (a.cols() == 0) return "empty\n";
  std::vector<std::size_t> rows(a.rows()), cols(a.cols());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  trace_forest(a, f, rows, cols, 0, out);
  return out;
}

}  // namespace milptd
