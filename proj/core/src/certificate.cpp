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

// Certificate recursion. For a class of integral s x s matrices with
// entries bounded by a and a td-decomposition of height <= h and ttd <= t,
// G(h, t, s, a) bounds both the denominators and the entry magnitudes of
// the inverse of any invertible member. Every combination step is a
// worst-case rule:
//   - a sum of terms with denominators <= D has denominator <= D!
//   - Hadamard: |det| <= (k a)^k for a k x k matrix.

#include <cmath>
#include <cstdio>
#include <map>
#include <tuple>

#include "milptd/error.hpp"
#include "milptd/fractionality.hpp"
#include "milptd/graph.hpp"

namespace milptd {

namespace {

constexpr long double kLn2 = 0.693147180559945309417232121458176568L;

std::string format_log2(long double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3Lf", v);
  return buf;
}

// Arithmetic on BoundValue: exact while the result fits the bit cap, log2
// estimates beyond it. All values are >= 1.
class Calc {
 public:
  explicit Calc(std::size_t bit_cap) : cap_(bit_cap) {}

  BoundValue make(BigInt v) const {
    if (v < 1) v = 1;
    BoundValue out;
    out.log2 = log2_abs(v);
    if (bit_length(v) > cap_) {
      out.exact = false;
      out.value = 0;
    } else {
      out.value = std::move(v);
    }
    return out;
  }

  BoundValue make(std::size_t v) const { return make(BigInt(static_cast<unsigned long>(v))); }

  BoundValue inexact(long double log2) const {
    BoundValue out;
    out.exact = false;
    out.value = 0;
    out.log2 = log2;
    return out;
  }

  BoundValue mul(const BoundValue& x, const BoundValue& y) const {
    const long double l = x.log2 + y.log2;
    if (x.exact && y.exact && l <= cap_ + 2) return make(BigInt(x.value * y.value));
    return inexact(l);
  }

  BoundValue mul(std::initializer_list<BoundValue> xs) const {
    BoundValue acc = make(std::size_t{1});
    for (const auto& x : xs) acc = mul(acc, x);
    return acc;
  }

  BoundValue add(const BoundValue& x, const BoundValue& y) const {
    if (x.exact && y.exact) return make(BigInt(x.value + y.value));
    const long double hi = std::max(x.log2, y.log2);
    const long double lo = std::min(x.log2, y.log2);
    if (std::isinf(hi)) return inexact(hi);
    return inexact(hi + std::log2(1.0L + std::exp2(lo - hi)));
  }

  BoundValue pow(const BoundValue& base, const BoundValue& e) const {
    if (base.exact && base.value == 1) return base;
    const long double ev = e.exact ? static_cast<long double>(e.value.get_d())
                                   : std::exp2(e.log2);
    const long double l = base.log2 * ev;
    if (base.exact && e.exact && e.value.fits_ulong_p() && l <= cap_ + 2) {
      BigInt r;
      mpz_pow_ui(r.get_mpz_t(), base.value.get_mpz_t(), e.value.get_ui());
      return make(std::move(r));
    }
    return inexact(l);
  }

  BoundValue pow(const BoundValue& base, std::size_t e) const { return pow(base, make(e)); }

  BoundValue factorial(const BoundValue& x) const {
    const long double xv = x.exact ? static_cast<long double>(x.value.get_d())
                                   : std::exp2(x.log2);
    const long double l = std::lgamma(xv + 1.0L) / kLn2;
    if (x.exact && x.value.fits_ulong_p() && l <= cap_ + 2) {
      BigInt r;
      mpz_fac_ui(r.get_mpz_t(), x.value.get_ui());
      return make(std::move(r));
    }
    return inexact(l);
  }

  static bool less(const BoundValue& x, const BoundValue& y) {
    if (x.exact && y.exact) return x.value < y.value;
    if (x.exact != y.exact) return x.exact;
    return x.log2 < y.log2;
  }

  static const BoundValue& max(const BoundValue& x, const BoundValue& y) {
    return less(x, y) ? y : x;
  }
  static const BoundValue& min(const BoundValue& x, const BoundValue& y) {
    return less(y, x) ? y : x;
  }

 private:
  std::size_t cap_;
};

struct Pair {
  BoundValue den;
  BoundValue mag;
};

std::string key_of(const BoundValue& v) {
  return v.exact ? v.value.get_str() : "~" + format_log2(v.log2);
}

class Recursion {
 public:
  explicit Recursion(std::size_t bit_cap) : calc_(bit_cap) {}

  Pair eval(std::size_t h, std::size_t t, std::size_t s, const BoundValue& a) {
    const BoundValue one = calc_.make(std::size_t{1});
    if (h == 0 || t == 0 || s == 0) return {one, one};
    t = std::min(t, h);
    auto key = std::make_tuple(h, t, s, key_of(a));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    CertificateLevel level;
    level.height = h;
    level.ttd = t;
    level.size = s;
    level.magnitude = a;
    Pair out;
    if (t == 1) {
      const std::size_t k = std::min(h, s);
      level.level_height = h;
      out.den = calc_.pow(calc_.mul(calc_.make(k), a), k);
      out.mag = calc_.pow(calc_.mul(calc_.make(k - 1), a), k - 1);
      level.base_bound = out.den;
    } else {
      const Pair prev = eval(h, t - 1, s, a);
      const Pair q2 = eval(h - 1, t - 1, s, a);
      const std::size_t k1max = h - t + 1;
      level.level_height = k1max;

      struct Peel {
        Pair b;
        BoundValue beta, w_mag, w_den, a;
      };
      std::vector<Peel> peels;
      BoundValue a_p = a;
      for (std::size_t p = 1; p <= k1max; ++p) {
        const std::size_t r_p = k1max - p + 1;
        Peel pl;
        pl.a = a_p;
        pl.b = eval(h, t - 1, s, a_p);
        pl.beta = Calc::min(calc_.pow(pl.b.den, r_p * s), calc_.factorial(pl.b.den));
        pl.w_mag = calc_.mul({calc_.make(s), pl.b.mag, a_p});
        pl.w_den = calc_.factorial(pl.b.den);
        a_p = calc_.mul({pl.beta, a_p, calc_.add(one, calc_.mul(calc_.make(r_p), pl.w_mag))});
        level.betas.push_back(pl.beta);
        peels.push_back(std::move(pl));
      }

      BoundValue p_den = one;
      BoundValue p_mag = one;
      const BoundValue s3 = calc_.make(s * s * s + 1);
      for (std::size_t idx = peels.size(); idx-- > 0;) {
        const Peel& pl = peels[idx];
        const BoundValue d_mag =
            idx + 1 == peels.size() ? one : calc_.mul(pl.beta, p_mag);
        p_den = calc_.factorial(calc_.mul({pl.w_den, p_den, pl.b.den}));
        p_mag = calc_.mul({s3, pl.w_mag, d_mag, pl.a, pl.b.mag});
      }
      level.q1_bound = p_den;
      level.q2_bound = q2.den;

      const BoundValue rp_den = calc_.factorial(calc_.mul(q2.den, p_den));
      const BoundValue rp_mag = calc_.mul({calc_.make(s * s), q2.mag, a, p_mag});
      level.r_prime_bound = rp_den;

      out.den = Calc::max(Calc::max(prev.den, q2.den), Calc::max(p_den, rp_den));
      out.mag = Calc::max(Calc::max(prev.mag, q2.mag), Calc::max(p_mag, rp_mag));
    }
    level.bound = out.den;
    level.inverse_magnitude = out.mag;
    levels_.push_back(std::move(level));
    memo_.emplace(std::move(key), out);
    return out;
  }

  const Calc& calc() const { return calc_; }
  std::vector<CertificateLevel>& levels() { return levels_; }

 private:
  Calc calc_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::string>, Pair> memo_;
  std::vector<CertificateLevel> levels_;
};

void finish(FractionalityCertificate& cert, const BoundValue& bound) {
  cert.log2_bound = bound.log2;
  if (!bound.exact) {
    throw CapExceededError("fractionality bound needs about 2^" + format_log2(bound.log2) +
                               " (bit cap " + std::to_string(cert.bit_cap) + ")",
                           bound.log2);
  }
  cert.bound = bound.value;
}

}  // namespace

std::string BoundValue::str() const {
  if (exact && bit_length(value) <= 256) return value.get_str();
  return "2^" + format_log2(log2);
}

FractionalityCertificate frac_bound(const RationalMatrix& a, const TdDecomposition& f,
                                    Side side, std::size_t bit_cap) {
  const RationalMatrix m = side == Side::kDual ? a.transpose() : a;
  if (!m.is_integral()) throw ValidationError("certificates need an integral matrix");
  if (f.vertex_count() != m.cols()) {
    throw ValidationError("decomposition size does not match the chosen side");
  }
  if (!validate_td(primal_graph(m), f)) {
    throw ValidationError("decomposition does not validate against the chosen side");
  }
  FractionalityCertificate cert;
  cert.side = side;
  cert.method = "generic";
  cert.bit_cap = bit_cap;
  cert.stats = td_stats(f);
  cert.size = std::min(m.rows(), m.cols());
  cert.magnitude = std::max(m.max_abs(), BigInt(1));

  Recursion rec(bit_cap);
  const Pair top = rec.eval(cert.stats.height, cert.stats.topological_height, cert.size,
                            rec.calc().make(cert.magnitude));
  cert.trace = std::move(rec.levels());
  finish(cert, top.den);
  return cert;
}

FractionalityCertificate frac_bound_special(const BigInt& a, std::size_t t,
                                            SpecialFamily family, std::size_t bit_cap) {
  if (a < 1 || t < 1) throw ValidationError("special certificate needs a, t >= 1");
  FractionalityCertificate cert;
  cert.side = family == SpecialFamily::kNFold ? Side::kDual : Side::kPrimal;
  cert.method = "special";
  cert.constant = "(t*a)^(t^2) * isqrt((t*a^2)^t)";
  cert.bit_cap = bit_cap;
  cert.size = t * t;
  cert.magnitude = a;

  const Calc calc(bit_cap);
  const BoundValue ta = calc.mul(calc.make(t), calc.make(a));
  const BoundValue q1 = calc.pow(ta, t * t);
  const BoundValue hadamard_sq = calc.pow(calc.mul(calc.make(t), calc.make(BigInt(a * a))), t);
  BoundValue q2 = hadamard_sq;
  if (hadamard_sq.exact) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), hadamard_sq.value.get_mpz_t());
    q2 = calc.make(std::move(root));
  } else {
    q2 = calc.inexact(hadamard_sq.log2 / 2);
  }
  const BoundValue bound = calc.mul(q1, q2);

  CertificateLevel level;
  level.height = 2 * t;
  level.ttd = 2;
  level.size = t * t;
  level.level_height = t;
  level.magnitude = calc.make(a);
  level.q1_bound = q1;
  level.q2_bound = q2;
  level.bound = bound;
  cert.trace.push_back(level);
  finish(cert, bound);
  return cert;
}

std::string to_string(const FractionalityCertificate& cert) {
  std::string out = "certificate method=" + cert.method + " side=" + to_string(cert.side) +
                    " log2=" + format_log2(cert.log2_bound) + "\n";
  out += "bound " + cert.bound.get_str() + "\n";
  if (!cert.constant.empty()) out += "constant " + cert.constant + "\n";
  if (cert.method == "generic") {
    out += "td height=" + std::to_string(cert.stats.height) +
           " ttd=" + std::to_string(cert.stats.topological_height) + " levels=";
    for (std::size_t i = 0; i < cert.stats.level_heights.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(cert.stats.level_heights[i]);
    }
    out += "\n";
  }
  for (const auto& l : cert.trace) {
    out += "  class h=" + std::to_string(l.height) + " t=" + std::to_string(l.ttd) +
           " s=" + std::to_string(l.size) + " a=" + l.magnitude.str() +
           " k1<=" + std::to_string(l.level_height) + " fr<=" + l.bound.str();
    if (l.ttd == 1) {
      out += " base=" + l.base_bound.str();
    } else {
      out += " q1=" + l.q1_bound.str() + " q2=" + l.q2_bound.str();
      if (!l.betas.empty()) {
        out += " r'=" + l.r_prime_bound.str() + " beta=";
        for (std::size_t i = 0; i < l.betas.size(); ++i) {
          if (i > 0) out += ',';
          out += l.betas[i].str();
        }
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace milptd
