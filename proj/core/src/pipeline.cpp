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

#include "milptd/pipeline.hpp"

#include <numeric>

#include "milptd/error.hpp"
#include "milptd/graph.hpp"
#include "milptd/integralization.hpp"
#include "milptd/linalg.hpp"

namespace milptd {

const char* to_string(MSource source) {
  switch (source) {
    case MSource::kNone:
      return "none";
    case MSource::kOverride:
      return "override";
    case MSource::kCertificate:
      return "certificate";
    case MSource::kEmpirical:
      return "empirical";
    case MSource::kDeterminant:
      return "determinant";
    case MSource::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kDeterminantSubsetCap = 1000000;

bool try_certificate(const MilpInstance& inst, const TdDecomposition& fp,
                     const TdDecomposition& fd, const PipelineOptions& opt,
                     PipelineReport& rep) {
  const std::vector<std::size_t> rows = *independent_rows(inst.a_frac);
  const RationalMatrix a_q = inst.a_frac.select_rows(rows);
  TdDecomposition f;
  if (rep.side == Side::kPrimal) {
    std::vector<std::size_t> cols(inst.q());
    std::iota(cols.begin(), cols.end(), inst.z());
    f = restrict_decomposition(fp, cols);
  } else {
    f = restrict_decomposition(fd, rows);
  }
  try {
    const FractionalityCertificate cert = frac_bound(a_q, f, rep.side, opt.bit_cap);
    rep.certificate_log2 = cert.log2_bound;
    rep.scale = choose_scale(cert.bound, opt.bit_cap);
    rep.m = cert.bound;
    rep.m_source = MSource::kCertificate;
    return true;
  } catch (const CapExceededError& e) {
    rep.certificate_capped = true;
    if (rep.certificate_log2 == 0) rep.certificate_log2 = e.log2_estimate();
    return false;
  }
}

bool try_empirical(const MilpInstance& inst, const PipelineOptions& opt,
                   PipelineReport& rep) {
  if (inst.q() > opt.vertex_cap || integer_box_volume(inst) > opt.oracle_cap) return false;
  const std::size_t z = inst.z();
  const RationalVector lq(inst.lower.begin() + z, inst.lower.end());
  const RationalVector uq(inst.upper.begin() + z, inst.upper.end());
  BigInt lcm_all = 1;
  BigInt max_den = 1;
  IntVector point(inst.lower.begin(), inst.lower.begin() + z);
  for (;;) {
    RationalVector rhs = to_rational(inst.b);
    for (std::size_t j = 0; j < z; ++j) {
      for (std::size_t i = 0; i < inst.rows(); ++i) rhs[i] -= inst.a_int(i, j) * point[j];
    }
    for (const RationalVector& v : vertex_enumerate(inst.a_frac, rhs, lq, uq, opt.vertex_cap)) {
      for (const Rational& x : v) {
        const BigInt den = x.get_den();
        lcm_all = lcm(lcm_all, den);
        if (den > max_den) max_den = den;
      }
    }
    std::size_t k = 0;
    while (k < z && point[k] == inst.upper[k]) {
      point[k] = inst.lower[k];
      ++k;
    }
    if (k == z) break;
    ++point[k];
  }
  rep.m = max_den;
  rep.scale = lcm_all;
  rep.m_source = MSource::kEmpirical;
  return true;
}

void use_determinants(const MilpInstance& inst, PipelineReport& rep) {
  const std::vector<std::size_t> rows = *independent_rows(inst.a_frac);
  const RationalMatrix a_q = inst.a_frac.select_rows(rows);
  const std::size_t m = a_q.rows();
  const std::size_t n = a_q.cols();
  BigInt subsets = 1;
  for (std::size_t k = 0; k < m; ++k) subsets = subsets * (n - k) / (k + 1);
  if (subsets > kDeterminantSubsetCap) {
    throw CapExceededError("no usable fractionality bound: certificate, vertex and "
                           "determinant fallbacks all exceed their caps",
                           rep.certificate_log2);
  }
  BigInt lcm_all = 1;
  BigInt max_det = 1;
  std::vector<std::size_t> basis(m);
  std::iota(basis.begin(), basis.end(), std::size_t{0});
  for (;;) {
    const BigInt det = abs(BigInt(mat_det(a_q.select_cols(basis)).get_num()));
    if (det != 0) {
      lcm_all = lcm(lcm_all, det);
      if (det > max_det) max_det = det;
    }
    std::size_t k = m;
    while (k > 0 && basis[k - 1] == n - m + k - 1) --k;
    if (k == 0) break;
    ++basis[k - 1];
    for (std::size_t r = k; r < m; ++r) basis[r] = basis[r - 1] + 1;
  }
  rep.m = max_det;
  rep.scale = lcm_all;
  rep.m_source = MSource::kDeterminant;
}

}  // namespace

MilpSolution milp_solve(const MilpInstance& inst, const PipelineOptions& opt) {
  inst.validate();
  MilpSolution out;
  PipelineReport& rep = out.report;

  const RationalMatrix a = inst.matrix();
  const TdDecomposition fp = td_decompose(primal_graph(a), opt.exact_td_cap);
  const TdDecomposition fd = td_decompose(dual_graph(a), opt.exact_td_cap);
  rep.primal = td_stats(fp);
  rep.dual = td_stats(fd);
  switch (opt.side) {
    case SideChoice::kPrimal:
      rep.side = Side::kPrimal;
      break;
    case SideChoice::kDual:
      rep.side = Side::kDual;
      break;
    case SideChoice::kAuto:
      rep.side = rep.primal.height <= rep.dual.height ? Side::kPrimal : Side::kDual;
      break;
  }

  const RationalVector b = to_rational(inst.b);
  if (!independent_rows(a, b)) {
    rep.m_source = MSource::kInfeasible;
    return out;
  }

  if (inst.q() == 0) {
    rep.m_source = MSource::kNone;
  } else if (opt.scale) {
    if (*opt.scale < 1) throw ValidationError("scale override must be positive");
    rep.scale = *opt.scale;
    rep.m = *opt.scale;
    rep.m_source = MSource::kOverride;
  } else if (!try_certificate(inst, fp, fd, opt, rep) && !try_empirical(inst, opt, rep)) {
    use_determinants(inst, rep);
  }

  const IlpInstance ilp = integralize(inst, rep.scale);
  SolveResult r = ilp_solve(ilp, opt.node_limit);
  rep.ilp_nodes = r.stats.nodes;
  rep.pivots = r.stats.pivots;
  out.result.stats = r.stats;
  if (r.status != SolveStatus::kOptimal) {
    out.result.status = r.status;
    return out;
  }

  RationalVector x = recover(std::span<const Rational>(r.x), rep.scale, inst);
  const Rational value = inst.objective(x);
  if (value * rep.scale != r.objective) {
    throw InvariantError("scaled objective does not equal scale times the recovered one");
  }
  for (std::size_t j = inst.z(); j < x.size(); ++j) {
    if (rep.scale % BigInt(x[j].get_den()) != 0) {
      throw InvariantError("continuous denominator does not divide the scale");
    }
  }
  out.result.status = SolveStatus::kOptimal;
  out.result.x = std::move(x);
  out.result.objective = value;
  return out;
}

}  // namespace milptd
