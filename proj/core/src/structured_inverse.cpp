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

#include <numeric>

#include "milptd/block_structure.hpp"
#include "milptd/error.hpp"
#include "milptd/fractionality.hpp"
#include "milptd/graph.hpp"
#include "milptd/linalg.hpp"

namespace milptd {

const char* to_string(Side side) { return side == Side::kPrimal ? "primal" : "dual"; }

namespace {

std::vector<std::size_t> iota_range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> out(end - begin);
  std::iota(out.begin(), out.end(), begin);
  return out;
}

// P = A[row_order, col_order] and P^-1 = p_inv give A^-1.
RationalMatrix unpermute(const RationalMatrix& p_inv,
                         const std::vector<std::size_t>& row_order,
                         const std::vector<std::size_t>& col_order) {
  RationalMatrix inv(p_inv.rows(), p_inv.cols());
  for (std::size_t i = 0; i < p_inv.rows(); ++i) {
    for (std::size_t j = 0; j < p_inv.cols(); ++j) {
      inv(col_order[i], row_order[j]) = p_inv(i, j);
    }
  }
  return inv;
}

// Q P = Qp with P moving column order[i] to position i, so Q^-1 = P Qp^-1.
RationalMatrix unpermute_rows(const RationalMatrix& qp_inv,
                              const std::vector<std::size_t>& order) {
  RationalMatrix inv(qp_inv.rows(), qp_inv.cols());
  for (std::size_t i = 0; i < qp_inv.rows(); ++i) {
    for (std::size_t j = 0; j < qp_inv.cols(); ++j) inv(order[i], j) = qp_inv(i, j);
  }
  return inv;
}

RationalMatrix assemble_split(const RationalMatrix& q1_inv, const RationalMatrix& r_prime,
                              const RationalMatrix& q2_inv) {
  return vstack(hstack(q1_inv, RationalMatrix(q1_inv.rows(), q2_inv.cols())),
                hstack(r_prime, q2_inv));
}

RationalMatrix peel_inverse(const PeelStep& step, const RationalMatrix& q_prime_inv) {
  const RationalMatrix inner =
      block_diagonal(RationalMatrix::identity(step.block_rows),
                     Rational(step.beta) * q_prime_inv);
  return unpermute_rows(step.e3 * inner * step.e2 * step.e1, step.order);
}

struct PeelBlock {
  std::size_t rows;
  std::size_t cols;
  const TdDecomposition* child;
};

StructuredInverse invert(const RationalMatrix& a, const TdDecomposition& f);

RationalMatrix peel(const RationalMatrix& q, std::size_t carried,
                    const std::vector<PeelBlock>& blocks, std::size_t index,
                    std::vector<PeelStep>& steps) {
  if (index == blocks.size()) {
    if (q.rows() != 0) throw InvariantError("strict part left unpeeled columns");
    return RationalMatrix();
  }
  const std::size_t s = q.rows();
  const std::size_t m = blocks[index].rows;
  const std::size_t width = carried + blocks[index].cols;

  const RationalMatrix a_hat = q.select(iota_range(0, m), iota_range(0, width));
  std::vector<std::size_t> basis = independent_columns(a_hat);
  if (basis.size() < m) throw SingularMatrixError();

  std::vector<std::size_t> order = basis;
  std::vector<bool> in_basis(width, false);
  for (std::size_t c : basis) in_basis[c] = true;
  for (std::size_t c = 0; c < width; ++c) {
    if (!in_basis[c]) order.push_back(c);
  }
  const std::size_t non_basic = order.size() - m;
  for (std::size_t c = width; c < s; ++c) order.push_back(c);

  const RationalMatrix qp = q.select_cols(order);
  const RationalMatrix b = qp.select(iota_range(0, m), iota_range(0, m));
  const TdDecomposition f_hat =
      restrict_decomposition(graft_path_above(*blocks[index].child, carried), basis);
  StructuredInverse sub = invert(b, f_hat);

  const RationalMatrix x = qp.select(iota_range(m, s), iota_range(0, m));
  const RationalMatrix n1 = qp.select(iota_range(0, m), iota_range(m, s));
  const RationalMatrix w = sub.inverse * n1;

  PeelStep step;
  step.carried = carried;
  step.block_rows = m;
  step.block_cols = blocks[index].cols;
  step.basis = basis;
  step.order = order;
  step.e1 = block_diagonal(sub.inverse, RationalMatrix::identity(s - m));
  step.e2 = RationalMatrix::identity(s);
  step.e3 = RationalMatrix::identity(s);
  for (std::size_t i = 0; i < s - m; ++i) {
    for (std::size_t j = 0; j < m; ++j) step.e2(m + i, j) = -x(i, j);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < s - m; ++j) step.e3(i, m + j) = -w(i, j);
  }

  const RationalMatrix t = step.e2 * step.e1 * qp * step.e3;
  RationalMatrix q_dd(s - m, s - m);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i >= m && j >= m) {
        q_dd(i - m, j - m) = t(i, j);
      } else if (t(i, j) != (i == j ? 1 : 0)) {
        throw InvariantError("shear elimination did not isolate the basis block");
      }
    }
  }
  step.beta = common_denominator(q_dd);
  step.basis_fractionality = fractionality(sub.inverse);
  step.basis_trace = std::make_shared<StructuredInverseTrace>(std::move(sub.trace));

  const RationalMatrix q_prime = Rational(step.beta) * q_dd;
  const std::size_t slot = steps.size();
  steps.push_back(std::move(step));
  const RationalMatrix q_prime_inv = peel(q_prime, non_basic, blocks, index + 1, steps);
  return peel_inverse(steps[slot], q_prime_inv);
}

StructuredInverse invert_components(const RationalMatrix& a, const TdDecomposition& f) {
  StructuredInverse out;
  out.trace.kind = StructuredInverseTrace::Kind::kComponents;
  out.trace.size = a.rows();
  out.trace.stats = td_stats(f);
  RationalMatrix p_inv;
  for (std::size_t root : f.roots()) {
    const std::vector<std::size_t> cols = f.subtree(root);
    std::vector<bool> in_tree(a.cols(), false);
    for (std::size_t c : cols) in_tree[c] = true;
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        if (a(r, c) != 0 && in_tree[c]) {
          rows.push_back(r);
          break;
        }
      }
    }
    if (rows.size() != cols.size()) throw SingularMatrixError();
    StructuredInverse child = invert(a.select(rows, cols), restrict_decomposition(f, cols));
    p_inv = block_diagonal(p_inv, child.inverse);
    out.trace.row_order.insert(out.trace.row_order.end(), rows.begin(), rows.end());
    out.trace.col_order.insert(out.trace.col_order.end(), cols.begin(), cols.end());
    out.trace.children.push_back(std::move(child.trace));
  }
  if (out.trace.row_order.size() != a.rows()) throw SingularMatrixError();
  out.inverse = unpermute(p_inv, out.trace.row_order, out.trace.col_order);
  return out;
}

StructuredInverse invert_split(const RationalMatrix& a, const TdDecomposition& f,
                               const TdStats& stats) {
  const BlockStructure b = primal_decompose(a, f);
  StructuredInverse out;
  StructuredInverseTrace& tr = out.trace;
  tr.kind = StructuredInverseTrace::Kind::kSplit;
  tr.size = a.rows();
  tr.stats = stats;
  tr.k1 = b.k1;

  std::vector<std::size_t> q1_rows, q1_cols = b.border_columns, q2_rows, q2_cols;
  std::vector<PeelBlock> strict;
  RationalMatrix q2_inv;
  for (const Block& blk : b.blocks) {
    const std::size_t m = blk.row_map.size();
    const std::size_t n = blk.column_map.size();
    if (m < n) throw SingularMatrixError();
    tr.blocks.push_back({m, n, m > n});
    if (m > n) {
      q1_rows.insert(q1_rows.end(), blk.row_map.begin(), blk.row_map.end());
      q1_cols.insert(q1_cols.end(), blk.column_map.begin(), blk.column_map.end());
      strict.push_back({m, n, &blk.child});
    } else {
      q2_rows.insert(q2_rows.end(), blk.row_map.begin(), blk.row_map.end());
      q2_cols.insert(q2_cols.end(), blk.column_map.begin(), blk.column_map.end());
      StructuredInverse child = invert(blk.diagonal, blk.child);
      q2_inv = block_diagonal(q2_inv, child.inverse);
      tr.children.push_back(std::move(child.trace));
    }
  }
  if (q1_rows.size() != q1_cols.size()) throw SingularMatrixError();
  tr.r_prime = strict.size();
  tr.q1_size = q1_rows.size();

  const RationalMatrix q1_inv = peel(a.select(q1_rows, q1_cols), b.k1, strict, 0, tr.peels);
  tr.s = a.select(q2_rows, q1_cols);
  tr.r_prime_matrix = -(q2_inv * tr.s * q1_inv);

  tr.row_order = q1_rows;
  tr.row_order.insert(tr.row_order.end(), q2_rows.begin(), q2_rows.end());
  tr.col_order = q1_cols;
  tr.col_order.insert(tr.col_order.end(), q2_cols.begin(), q2_cols.end());
  out.inverse = unpermute(assemble_split(q1_inv, tr.r_prime_matrix, q2_inv), tr.row_order,
                          tr.col_order);
  return out;
}

StructuredInverse invert(const RationalMatrix& a, const TdDecomposition& f) {
  if (a.rows() == 0) return {};
  if (f.roots().size() > 1) return invert_components(a, f);
  const TdStats stats = td_stats(f);
  if (stats.topological_height <= 1) {
    StructuredInverse out;
    out.inverse = mat_inverse(a);
    out.trace.kind = StructuredInverseTrace::Kind::kDirect;
    out.trace.size = a.rows();
    out.trace.stats = stats;
    out.trace.direct_inverse = out.inverse;
    return out;
  }
  return invert_split(a, f, stats);
}

RationalMatrix replay_peels(const std::vector<PeelStep>& steps, std::size_t index) {
  if (index == steps.size()) return RationalMatrix();
  return peel_inverse(steps[index], replay_peels(steps, index + 1));
}

void describe(const StructuredInverseTrace& tr, std::size_t depth, std::string& out) {
  const std::string pad(2 * depth, ' ');
  using Kind = StructuredInverseTrace::Kind;
  switch (tr.kind) {
    case Kind::kEmpty:
      out += pad + "empty\n";
      return;
    case Kind::kDirect:
      out += pad + "direct size=" + std::to_string(tr.size) +
             " fr=" + to_string(fractionality(tr.direct_inverse)) + "\n";
      return;
    case Kind::kComponents:
      out += pad + "components size=" + std::to_string(tr.size) +
             " trees=" + std::to_string(tr.children.size()) + "\n";
      for (const auto& child : tr.children) describe(child, depth + 1, out);
      return;
    case Kind::kSplit:
      break;
  }
  out += pad + "split size=" + std::to_string(tr.size) + " k1=" + std::to_string(tr.k1) +
         " ttd=" + std::to_string(tr.stats.topological_height) +
         " r'=" + std::to_string(tr.r_prime) + " q1=" + std::to_string(tr.q1_size) +
         " blocks=";
  for (std::size_t i = 0; i < tr.blocks.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(tr.blocks[i].rows) + "x" + std::to_string(tr.blocks[i].cols);
    if (tr.blocks[i].strict) out += '*';
  }
  out += " fr(R')=" + to_string(fractionality(tr.r_prime_matrix)) + "\n";
  for (const PeelStep& p : tr.peels) {
    out += pad + "  peel carried=" + std::to_string(p.carried) + " basis=[";
    for (std::size_t k = 0; k < p.basis.size(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(p.basis[k]);
    }
    out += "] beta=" + to_string(p.beta) + " fr(B^-1)=" + to_string(p.basis_fractionality) +
           "\n";
    describe(*p.basis_trace, depth + 2, out);
  }
  for (const auto& child : tr.children) describe(child, depth + 1, out);
}

}  // namespace

StructuredInverse structured_inverse(const RationalMatrix& a_b, const TdDecomposition& f) {
  if (!a_b.is_square()) throw DimensionError("structured inverse needs a square matrix");
  if (f.vertex_count() != a_b.cols()) {
    throw ValidationError("decomposition size does not match the column count");
  }
  if (!validate_td(primal_graph(a_b), f)) {
    throw ValidationError("decomposition does not validate against the primal graph");
  }
  return invert(a_b, f);
}

RationalMatrix replay(const StructuredInverseTrace& trace) {
  using Kind = StructuredInverseTrace::Kind;
  switch (trace.kind) {
    case Kind::kEmpty:
      return RationalMatrix();
    case Kind::kDirect:
      return trace.direct_inverse;
    case Kind::kComponents: {
      RationalMatrix p_inv;
      for (const auto& child : trace.children) p_inv = block_diagonal(p_inv, replay(child));
      return unpermute(p_inv, trace.row_order, trace.col_order);
    }
    case Kind::kSplit:
      break;
  }
  RationalMatrix q2_inv;
  for (const auto& child : trace.children) q2_inv = block_diagonal(q2_inv, replay(child));
  const RationalMatrix q1_inv = replay_peels(trace.peels, 0);
  const RationalMatrix r_prime = -(q2_inv * trace.s * q1_inv);
  return unpermute(assemble_split(q1_inv, r_prime, q2_inv), trace.row_order,
                   trace.col_order);
}

std::string to_string(const StructuredInverseTrace& trace) {
  std::string out;
  describe(trace, 0, out);
  return out;
}

}  // namespace milptd
