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

#include "milptd/ilp.hpp"

#include <optional>
#include <queue>

#include "milptd/error.hpp"

namespace milptd {

namespace {

struct Node {
  Rational bound;
  std::size_t id;
  RationalVector lower;
  RationalVector upper;
  RationalVector x;
};

struct WorseNode {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.id > b.id;
  }
};

// Index of the variable whose value is farthest from an integer.
std::optional<std::size_t> most_fractional(const RationalVector& x) {
  std::optional<std::size_t> best;
  Rational best_dist = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (is_integral(x[j])) continue;
    const Rational frac = x[j] - floor(x[j]);
    const Rational dist = frac < Rational(1, 2) ? frac : 1 - frac;
    if (!best || dist > best_dist) {
      best = j;
      best_dist = dist;
    }
  }
  return best;
}

}  // namespace

SolveResult ilp_solve(const IlpInstance& inst, std::size_t node_limit) {
  inst.validate();
  const RationalVector b = to_rational(inst.b);
  const RationalVector c = to_rational(inst.c);
  SolveResult out;

  std::priority_queue<Node, std::vector<Node>, WorseNode> open;
  std::size_t next_id = 0;
  auto relax = [&](RationalVector lower, RationalVector upper) {
    if (out.stats.nodes >= node_limit) {
      throw CapExceededError("branch and bound node limit " + std::to_string(node_limit) +
                             " reached");
    }
    ++out.stats.nodes;
    SolveResult lp = lp_solve_exact(inst.a, b, lower, upper, c);
    ++out.stats.lp_solves;
    out.stats.pivots += lp.stats.pivots;
    if (lp.status != SolveStatus::kOptimal) return;
    if (out.status == SolveStatus::kOptimal && lp.objective >= out.objective) return;
    open.push({lp.objective, next_id++, std::move(lower), std::move(upper), std::move(lp.x)});
  };

  relax(to_rational(inst.lower), to_rational(inst.upper));
  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (out.status == SolveStatus::kOptimal && node.bound >= out.objective) break;
    const auto j = most_fractional(node.x);
    if (!j) {
      out.status = SolveStatus::kOptimal;
      out.objective = node.bound;
      out.x = std::move(node.x);
      continue;
    }
    RationalVector down_upper = node.upper;
    down_upper[*j] = floor(node.x[*j]);
    RationalVector up_lower = node.lower;
    up_lower[*j] = ceil(node.x[*j]);
    relax(node.lower, std::move(down_upper));
    relax(std::move(up_lower), node.upper);
  }
  return out;
}

BigInt integer_box_volume(const MilpInstance& inst) {
  BigInt volume = 1;
  for (std::size_t j = 0; j < inst.z(); ++j) volume *= inst.upper[j] - inst.lower[j] + 1;
  return volume;
}

SolveResult milp_oracle(const MilpInstance& inst, std::size_t cap) {
  inst.validate();
  const std::size_t z = inst.z();
  if (integer_box_volume(inst) > cap) {
    throw CapExceededError("integer box exceeds the oracle cap " + std::to_string(cap));
  }
  const RationalVector lq(inst.lower.begin() + z, inst.lower.end());
  const RationalVector uq(inst.upper.begin() + z, inst.upper.end());
  const RationalVector cq(inst.c.begin() + z, inst.c.end());

  SolveResult out;
  IntVector point(inst.lower.begin(), inst.lower.begin() + z);
  for (;;) {
    ++out.stats.nodes;
    RationalVector rhs = to_rational(inst.b);
    Rational int_cost = 0;
    for (std::size_t j = 0; j < z; ++j) {
      int_cost += inst.c[j] * point[j];
      if (point[j] == 0) continue;
      for (std::size_t i = 0; i < inst.rows(); ++i) rhs[i] -= inst.a_int(i, j) * point[j];
    }
    const SolveResult lp = lp_solve_exact(inst.a_frac, rhs, lq, uq, cq);
    ++out.stats.lp_solves;
    out.stats.pivots += lp.stats.pivots;
    if (lp.status == SolveStatus::kOptimal) {
      const Rational value = int_cost + lp.objective;
      if (out.status != SolveStatus::kOptimal || value < out.objective) {
        out.status = SolveStatus::kOptimal;
        out.objective = value;
        out.x = to_rational(point);
        out.x.insert(out.x.end(), lp.x.begin(), lp.x.end());
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
  return out;
}

}  // namespace milptd
