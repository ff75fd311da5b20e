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

#include "milptd/lp.hpp"

#include <set>

#include "milptd/error.hpp"
#include "milptd/linalg.hpp"

namespace milptd {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kIterationGuard = 1000000;

// Dense tableau over structural plus artificial columns.
class Simplex {
 public:
  Simplex(const RationalMatrix& a, std::span<const Rational> b, std::span<const Rational> l,
          std::span<const Rational> u)
      : m_(a.rows()), n_(a.cols()), total_(a.cols() + a.rows()), t_(m_, total_),
        lo_(l.begin(), l.end()), up_(u.begin(), u.end()), at_upper_(total_, false),
        basis_(m_), value_(total_) {
    lo_.resize(total_);
    up_.resize(total_);
    for (std::size_t j = 0; j < n_; ++j) value_[j] = lo_[j];
    for (std::size_t i = 0; i < m_; ++i) {
      Rational resid = b[i];
      for (std::size_t j = 0; j < n_; ++j) resid -= a(i, j) * lo_[j];
      const int sign = resid < 0 ? -1 : 1;
      // Row i scaled by the sign so the artificial starts at |resid| >= 0.
      for (std::size_t j = 0; j < n_; ++j) t_(i, j) = sign * a(i, j);
      const std::size_t art = n_ + i;
      t_(i, art) = 1;
      lo_[art] = 0;
      up_[art] = sign * resid;
      value_[art] = sign * resid;
      basis_[i] = art;
    }
  }

  void optimize(std::span<const Rational> cost) {
    std::vector<bool> is_basic(total_, false);
    for (;;) {
      if (++iterations_ > kIterationGuard) throw InvariantError("simplex iteration guard hit");
      std::fill(is_basic.begin(), is_basic.end(), false);
      for (std::size_t v : basis_) is_basic[v] = true;

      // Bland: lowest-index improving nonbasic variable enters.
      std::size_t enter = total_;
      Rational d_enter;
      for (std::size_t j = 0; j < total_; ++j) {
        if (is_basic[j] || lo_[j] == up_[j]) continue;
        Rational d = cost[j];
        for (std::size_t i = 0; i < m_; ++i) {
          if (t_(i, j) != 0 && cost[basis_[i]] != 0) d -= cost[basis_[i]] * t_(i, j);
        }
        if ((!at_upper_[j] && d < 0) || (at_upper_[j] && d > 0)) {
          enter = j;
          d_enter = d;
          break;
        }
      }
      if (enter == total_) return;

      const int dir = at_upper_[enter] ? -1 : 1;
      Rational theta = up_[enter] - lo_[enter];
      std::size_t leave_row = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_(i, enter) == 0) continue;
        const Rational rate = -dir * t_(i, enter);  // change of basic i per unit step
        const std::size_t bv = basis_[i];
        const Rational limit = rate < 0 ? Rational((value_[bv] - lo_[bv]) / -rate)
                                        : Rational((up_[bv] - value_[bv]) / rate);
        if (limit < theta ||
            (limit == theta && leave_row < m_ && bv < basis_[leave_row])) {
          theta = limit;
          leave_row = i;
        }
      }

      for (std::size_t i = 0; i < m_; ++i) {
        if (t_(i, enter) != 0) value_[basis_[i]] -= dir * theta * t_(i, enter);
      }
      value_[enter] += dir * theta;
      if (leave_row == m_) {
        at_upper_[enter] = !at_upper_[enter];
        continue;
      }
      const std::size_t leaving = basis_[leave_row];
      const Rational rate = -dir * t_(leave_row, enter);
      at_upper_[leaving] = rate > 0;
      value_[leaving] = rate > 0 ? up_[leaving] : lo_[leaving];
      pivot(leave_row, enter);
    }
  }

  void pivot(std::size_t r, std::size_t j) {
    ++pivots_;
    const Rational p = t_(r, j);
    for (std::size_t k = 0; k < total_; ++k) {
      if (t_(r, k) != 0) t_(r, k) /= p;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_(i, j) == 0) continue;
      const Rational f = t_(i, j);
      for (std::size_t k = 0; k < total_; ++k) {
        if (t_(r, k) != 0) t_(i, k) -= f * t_(r, k);
      }
    }
    basis_[r] = j;
    at_upper_[j] = false;
  }

  // After phase 1: replace zero-valued basic artificials by structural
  // columns and freeze every artificial at zero.
  void drop_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      std::size_t j = 0;
      std::vector<bool> is_basic(total_, false);
      for (std::size_t v : basis_) is_basic[v] = true;
      while (j < n_ && (is_basic[j] || t_(i, j) == 0)) ++j;
      if (j == n_) throw InvariantError("independent row left without a structural pivot");
      const std::size_t art = basis_[i];
      pivot(i, j);
      value_[art] = 0;
    }
    for (std::size_t k = n_; k < total_; ++k) {
      lo_[k] = 0;
      up_[k] = 0;
      value_[k] = 0;
      at_upper_[k] = false;
    }
  }

  Rational artificial_sum() const {
    Rational s = 0;
    for (std::size_t k = n_; k < total_; ++k) s += value_[k];
    return s;
  }

  std::size_t pivots() const { return pivots_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const std::vector<Rational>& values() const { return value_; }

 private:
  std::size_t m_, n_, total_;
  RationalMatrix t_;
  std::vector<Rational> lo_, up_;
  std::vector<bool> at_upper_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> value_;
  std::size_t pivots_ = 0;
  std::size_t iterations_ = 0;
};

void check_lp_shapes(const RationalMatrix& a, std::size_t b, std::size_t l, std::size_t u,
                     std::size_t c) {
  if (b != a.rows()) throw DimensionError("rhs length differs from the row count");
  if (l != a.cols() || u != a.cols() || c != a.cols()) {
    throw DimensionError("bounds or objective length differs from the column count");
  }
}

}  // namespace

SolveResult lp_solve_exact(const RationalMatrix& a, std::span<const Rational> b,
                           std::span<const Rational> l, std::span<const Rational> u,
                           std::span<const Rational> c) {
  check_lp_shapes(a, b.size(), l.size(), u.size(), c.size());
  SolveResult out;
  out.stats.lp_solves = 1;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (l[j] > u[j]) return out;
  }
  const auto kept = independent_rows(a, b);
  if (!kept) return out;
  const RationalMatrix ar = a.select_rows(*kept);
  RationalVector br;
  for (std::size_t i : *kept) br.push_back(b[i]);

  Simplex sx(ar, br, l, u);
  const std::size_t total = ar.cols() + ar.rows();
  std::vector<Rational> phase1(total, 0);
  for (std::size_t k = ar.cols(); k < total; ++k) phase1[k] = 1;
  sx.optimize(phase1);
  out.stats.pivots = sx.pivots();
  if (sx.artificial_sum() != 0) return out;
  sx.drop_artificials();

  std::vector<Rational> phase2(total, 0);
  for (std::size_t j = 0; j < ar.cols(); ++j) phase2[j] = c[j];
  sx.optimize(phase2);

  out.status = SolveStatus::kOptimal;
  out.x.assign(sx.values().begin(), sx.values().begin() + ar.cols());
  for (std::size_t j = 0; j < ar.cols(); ++j) out.objective += c[j] * out.x[j];
  out.basis = sx.basis();
  out.kept_rows = *kept;
  out.stats.pivots = sx.pivots();
  return out;
}

std::vector<RationalVector> vertex_enumerate(const RationalMatrix& a,
                                             std::span<const Rational> b,
                                             std::span<const Rational> l,
                                             std::span<const Rational> u, std::size_t cap) {
  if (b.size() != a.rows() || l.size() != a.cols() || u.size() != a.cols()) {
    throw DimensionError("vertex enumeration shape mismatch");
  }
  const std::size_t n = a.cols();
  if (n > cap) {
    throw CapExceededError("vertex enumeration needs n <= " + std::to_string(cap) +
                           ", got " + std::to_string(n));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (l[j] > u[j]) return {};
  }
  const auto kept = independent_rows(a, b);
  if (!kept) return {};
  const RationalMatrix ar = a.select_rows(*kept);
  RationalVector br;
  for (std::size_t i : *kept) br.push_back(b[i]);
  const std::size_t m = ar.rows();

  std::set<RationalVector> found;
  std::vector<std::size_t> basis(m);
  for (std::size_t k = 0; k < m; ++k) basis[k] = k;
  std::vector<bool> mask(n, false);
  for (;;) {
    std::fill(mask.begin(), mask.end(), false);
    for (std::size_t k : basis) mask[k] = true;
    std::vector<std::size_t> non_basic;
    for (std::size_t j = 0; j < n; ++j) {
      if (!mask[j]) non_basic.push_back(j);
    }
    const RationalMatrix ab = ar.select_cols(basis);
    if (m == 0 || mat_det(ab) != 0) {
      const RationalMatrix inv = m == 0 ? RationalMatrix() : mat_inverse(ab);
      const std::size_t free = non_basic.size();
      for (std::size_t bits = 0; bits < (std::size_t{1} << free); ++bits) {
        RationalVector x(n);
        RationalVector rhs = br;
        for (std::size_t k = 0; k < free; ++k) {
          const std::size_t j = non_basic[k];
          x[j] = (bits >> k) & 1 ? u[j] : l[j];
          if (x[j] == 0) continue;
          for (std::size_t i = 0; i < m; ++i) rhs[i] -= ar(i, j) * x[j];
        }
        const RationalVector xb = inv * std::span<const Rational>(rhs);
        bool ok = true;
        for (std::size_t k = 0; k < m && ok; ++k) {
          x[basis[k]] = xb[k];
          ok = xb[k] >= l[basis[k]] && xb[k] <= u[basis[k]];
        }
        if (ok) found.insert(std::move(x));
      }
    }
    // Next m-subset in lexicographic order.
    std::size_t k = m;
    while (k > 0 && basis[k - 1] == n - m + k - 1) --k;
    if (k == 0) break;
    ++basis[k - 1];
    for (std::size_t r = k; r < m; ++r) basis[r] = basis[r - 1] + 1;
  }
  return {found.begin(), found.end()};
}

}  // namespace milptd
