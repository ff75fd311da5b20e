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

#include "milptd/integralization.hpp"

#include "milptd/error.hpp"

namespace milptd {

namespace {

// Balanced product keeps the multiplications roughly equal in size.
BigInt product(std::vector<BigInt>& xs, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return xs[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return product(xs, lo, mid) * product(xs, mid, hi);
}

}  // namespace

BigInt choose_scale(const BigInt& m, std::size_t bit_cap) {
  if (m < 1) throw ValidationError("scale needs M >= 1");
  // lcm(1..M) = e^(psi(M)) with psi(M) < 1.04 M, about 1.5 M bits.
  const long double est = 1.0L * m.get_d() * 1.4427L;
  if (!m.fits_ulong_p() || est > static_cast<long double>(bit_cap) * 1.05L) {
    throw CapExceededError("lcm(1..M) exceeds the bit cap", est);
  }
  const unsigned long n = m.get_ui();
  std::vector<bool> composite(n + 1, false);
  std::vector<BigInt> powers;
  for (unsigned long p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (unsigned long k = p * p; k <= n; k += p) composite[k] = true;
    unsigned long pk = p;
    while (pk <= n / p) pk *= p;
    powers.emplace_back(pk);
  }
  if (powers.empty()) return 1;
  BigInt out = product(powers, 0, powers.size());
  if (bit_length(out) > bit_cap) {
    throw CapExceededError("lcm(1..M) exceeds the bit cap", log2_abs(out));
  }
  return out;
}

IlpInstance integralize(const MilpInstance& inst, const BigInt& scale) {
  if (scale < 1) throw ValidationError("scale must be positive");
  inst.validate();
  const std::size_t z = inst.z();
  const Rational s(scale);
  IlpInstance out;
  out.a = hstack(s * inst.a_int, inst.a_frac);
  out.b.reserve(inst.rows());
  for (const BigInt& bi : inst.b) out.b.push_back(scale * bi);
  out.c = inst.c;
  out.lower = inst.lower;
  out.upper = inst.upper;
  for (std::size_t j = 0; j < inst.vars(); ++j) {
    if (j < z) {
      out.c[j] *= scale;
    } else {
      out.lower[j] *= scale;
      out.upper[j] *= scale;
    }
  }
  return out;
}

RationalVector recover(std::span<const Rational> z_opt, const BigInt& scale,
                       const MilpInstance& inst) {
  if (z_opt.size() != inst.vars()) throw DimensionError("solution length mismatch");
  RationalVector x(z_opt.begin(), z_opt.end());
  for (std::size_t j = inst.z(); j < x.size(); ++j) x[j] /= scale;
  if (auto bad = inst.violation(x)) {
    throw FeasibilityError(*bad, "recovered point violates condition " +
                                     std::to_string(*bad));
  }
  return x;
}

RationalVector recover(std::span<const BigInt> z_opt, const BigInt& scale,
                       const MilpInstance& inst) {
  const RationalVector z = to_rational(z_opt);
  return recover(std::span<const Rational>(z), scale, inst);
}

RationalVector embed(std::span<const Rational> x, const BigInt& scale,
                     const MilpInstance& inst) {
  if (x.size() != inst.vars()) throw DimensionError("point length mismatch");
  RationalVector z(x.begin(), x.end());
  for (std::size_t j = inst.z(); j < z.size(); ++j) z[j] *= scale;
  return z;
}

}  // namespace milptd
