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

#ifndef MILPTD_BLOCK_STRUCTURE_HPP_
#define MILPTD_BLOCK_STRUCTURE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "milptd/matrix.hpp"
#include "milptd/treedepth.hpp"

namespace milptd {

// One diagonal block of a primal decomposition: the rows whose support
// lies in the border columns plus one subtree below the first branching
// vertex.
struct Block {
  RationalMatrix border;      // rows x k1, restricted to the border columns
  RationalMatrix diagonal;    // rows x n_i, restricted to the subtree columns
  TdDecomposition child;      // decomposition of the diagonal block's columns
  std::vector<std::size_t> column_map;  // local column -> parent column
  std::vector<std::size_t> row_map;     // local row -> parent row
};

//   ( border_1  diagonal_1                )
//   (   ...                ...            )
//   ( border_d                 diagonal_d )
struct BlockStructure {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t k1 = 0;
  std::vector<std::size_t> border_columns;  // root-to-branching path order
  std::vector<Block> blocks;
};

// Splits A along a single-tree decomposition F of its primal graph. The
// border is the top path of F down to and including its first
// non-degenerate vertex; each child subtree of that vertex gives one block,
// in ascending order of the child's index. Rows touching only border
// columns attach to the first block. Throws ValidationError when F does not
// validate against G_P(A) or is not a single tree.
BlockStructure primal_decompose(const RationalMatrix& a, const TdDecomposition& f);

struct HattedBlock {
  RationalMatrix matrix;        // (border_i | diagonal_i)
  TdDecomposition decomposition;  // path of k1 vertices grafted above child_i
};

std::vector<HattedBlock> hatted_blocks(const BlockStructure& b);

// Rebuilds the decomposed matrix in its original row and column order.
RationalMatrix assemble(const BlockStructure& b);

// The block display itself: rows grouped by block, columns ordered as
// border, then each block's columns.
RationalMatrix block_display(const BlockStructure& b);

// Indented tree describing the decomposition and, recursively, that of
// every non-empty diagonal block.
std::string trace_text(const RationalMatrix& a, const TdDecomposition& f);

}  // namespace milptd

#endif  // MILPTD_BLOCK_STRUCTURE_HPP_
