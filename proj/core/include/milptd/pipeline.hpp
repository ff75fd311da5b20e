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

#ifndef MILPTD_PIPELINE_HPP_
#define MILPTD_PIPELINE_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "milptd/fractionality.hpp"
#include "milptd/ilp.hpp"
#include "milptd/lp.hpp"
#include "milptd/milp.hpp"
#include "milptd/treedepth.hpp"

namespace milptd {

enum class SideChoice { kAuto, kPrimal, kDual };

struct PipelineOptions {
  SideChoice side = SideChoice::kAuto;
  std::optional<BigInt> scale;  // overrides the computed scale
  std::size_t exact_td_cap = kDefaultExactTdCap;
  std::size_t bit_cap = kDefaultBitCap;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::size_t vertex_cap = kDefaultVertexCap;
  std::size_t node_limit = kDefaultNodeLimit;
};

// Where the fractionality bound M came from.
enum class MSource {
  kNone,         // q = 0, nothing to scale
  kOverride,     // supplied by the caller
  kCertificate,  // generic certificate, scale = lcm(1..M)
  kEmpirical,    // lcm of vertex denominators over the integer box
  kDeterminant,  // lcm of basis determinants of the continuous part
  kInfeasible,   // the equality system itself is inconsistent
};

const char* to_string(MSource source);

struct PipelineReport {
  Side side = Side::kPrimal;
  TdStats primal;
  TdStats dual;
  MSource m_source = MSource::kNone;
  BigInt m = 1;
  BigInt scale = 1;
  bool certificate_capped = false;
  long double certificate_log2 = 0;
  std::size_t ilp_nodes = 0;
  std::size_t pivots = 0;
  // A single solve at the lcm scale replaces iterating over candidate
  // scales; recorded so reports say which scheme ran.
  std::string scale_scheme = "single-lcm";
};

struct MilpSolution {
  SolveResult result;
  PipelineReport report;
};

// Structure analysis, fractionality bound, integralization, exact branch
// and bound, recovery. The report is filled even when the instance turns
// out to be infeasible.
MilpSolution milp_solve(const MilpInstance& inst, const PipelineOptions& options = {});

}  // namespace milptd

#endif  // MILPTD_PIPELINE_HPP_
