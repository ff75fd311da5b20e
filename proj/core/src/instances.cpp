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

#include "milptd/instances.hpp"

#include <array>
#include <cmath>
#include <random>

#include "milptd/error.hpp"
#include "milptd/graph.hpp"
#include "milptd/linalg.hpp"

namespace milptd {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kNames = {{
    {Family::kLemma4A1, "lemma4_a1"},
    {Family::kLemma4A2, "lemma4_a2"},
    {Family::kLemma5P1, "lemma5_p1"},
    {Family::kLemma5P2, "lemma5_p2"},
    {Family::kLemma5P3, "lemma5_p3"},
    {Family::kNFold, "nfold"},
    {Family::kTwoStage, "twostage"},
    {Family::kRandomTd, "random_td"},
    {Family::kRandomMilp, "random_milp"},
    {Family::kRandomIlp, "random_ilp"},
}};

// mt19937_64 has a fixed output sequence; reducing by modulo keeps the
// generators identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }
  long nonzero(long a) {
    const long v = uniform(1, a);
    return uniform(0, 1) == 0 ? v : -v;
  }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

long small(const BigInt& v, const char* what) {
  if (!v.fits_slong_p() || v < 0 || v > 1000000) {
    throw ValidationError(std::string(what) + " must lie in [0, 10^6]");
  }
  return v.get_si();
}

RationalMatrix lemma4_a1(std::size_t n) {
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = 2;
    if (i + 1 < n) a(i, i + 1) = -1;
  }
  return a;
}

RationalMatrix lemma4_a2(std::size_t n) {
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(0, i) = 1;
    a(i, 0) = 1;
    a(i, i) = 1;
  }
  return a;
}

// rows: one t-row group per brick; columns: t first-stage, then bricks.
RationalMatrix two_stage(std::size_t bricks, std::size_t t, long a, Rng& rng) {
  RationalMatrix m(bricks * t, t + bricks * t);
  for (std::size_t b = 0; b < bricks; ++b) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) m(b * t + i, j) = rng.nonzero(a);
      for (std::size_t j = 0; j < t; ++j) m(b * t + i, t + b * t + j) = rng.nonzero(a);
    }
  }
  return m;
}

MilpInstance random_mixed(const FamilySpec& spec, std::size_t z) {
  Rng rng(spec.seed);
  const std::size_t n = spec.n;
  const std::size_t m = spec.m == 0 ? 2 : spec.m;
  const long a = small(spec.magnitude, "magnitude");
  const long box = small(spec.box, "box");
  MilpInstance inst;
  RationalMatrix full(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) full(i, j) = rng.uniform(-a, a);
  }
  std::vector<long> x0(n);
  for (std::size_t j = 0; j < n; ++j) {
    const long lo = rng.uniform(-box, box);
    const long hi = rng.uniform(lo, box);
    inst.lower.emplace_back(lo);
    inst.upper.emplace_back(hi);
    x0[j] = rng.uniform(lo, hi);
    inst.c.emplace_back(rng.uniform(-3, 3));
  }
  const bool planted = rng.uniform(0, 3) != 0;
  for (std::size_t i = 0; i < m; ++i) {
    BigInt bi = 0;
    if (planted) {
      for (std::size_t j = 0; j < n; ++j) bi += BigInt(full(i, j).get_num()) * x0[j];
    } else {
      bi = rng.uniform(-2 * box, 2 * box);
    }
    inst.b.push_back(bi);
  }
  std::vector<std::size_t> int_cols(z), frac_cols(n - z);
  for (std::size_t j = 0; j < n; ++j) (j < z ? int_cols[j] : frac_cols[j - z]) = j;
  inst.a_int = full.select_cols(int_cols);
  inst.a_frac = full.select_cols(frac_cols);
  return inst;
}

Rational eval_poly(const std::vector<Rational>& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

long double eval_poly(const std::vector<Rational>& p, long double x) {
  long double acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + static_cast<long double>(p[i].get_d());
  return acc;
}

class Checker {
 public:
  void check(bool ok, const std::string& what, const std::string& counterexample = "") {
    report_.checks.push_back((ok ? "ok " : "FAIL ") + what);
    if (!ok) {
      report_.passed = false;
      if (report_.counterexample.empty()) report_.counterexample = counterexample;
    }
  }
  void note(const std::string& what) { report_.checks.push_back("note " + what); }
  VerificationReport take() { return std::move(report_); }

 private:
  VerificationReport report_;
};

std::string entry_text(std::size_t i, std::size_t j, const Rational& got,
                       const Rational& want) {
  return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): got " +
         to_string(got) + ", expected " + to_string(want);
}

void compare(Checker& ck, const RationalMatrix& got, const RationalMatrix& want,
             const std::string& what) {
  for (std::size_t i = 0; i < want.rows(); ++i) {
    for (std::size_t j = 0; j < want.cols(); ++j) {
      if (got(i, j) != want(i, j)) {
        ck.check(false, what, entry_text(i, j, got(i, j), want(i, j)));
        return;
      }
    }
  }
  ck.check(true, what);
}

const RationalMatrix& as_matrix(const Generated& g) {
  if (const auto* m = std::get_if<RationalMatrix>(&g)) return *m;
  throw ValidationError("expected a generated matrix");
}

const MipDescriptor& as_descriptor(const Generated& g) {
  if (const auto* d = std::get_if<MipDescriptor>(&g)) return *d;
  throw ValidationError("expected a generated descriptor");
}

void verify_lemma4_a1(const FamilySpec& spec, const Generated& g, Checker& ck) {
  const RationalMatrix& a = as_matrix(g);
  const std::size_t n = spec.n;
  ck.check(validate_td(primal_graph(a), TdDecomposition::path(n)) &&
               primal_graph(a) == path_graph(n),
           "primal graph is a path on " + std::to_string(n) + " vertices");
  const RationalMatrix inv = mat_inverse(a);
  compare(ck, inv, lemma4_a1_inverse(n), "inverse matches 1/2^(j-i+1) closed form");
  BigInt want;
  mpz_ui_pow_ui(want.get_mpz_t(), 2, n);
  const BigInt fr = fractionality(inv);
  ck.check(fr == want, "fr(A1^-1) = " + fr.get_str() + " = 2^" + std::to_string(n),
           "fr = " + fr.get_str());
}

void verify_lemma4_a2(const FamilySpec& spec, const Generated& g, Checker& ck) {
  const RationalMatrix& a = as_matrix(g);
  const std::size_t n = spec.n;
  const RationalMatrix inv = mat_inverse(a);
  compare(ck, inv, lemma4_a2_inverse(n),
          "inverse matches closed form with diagonal (n'-1)/n', n' = n-2");
  const BigInt fr = fractionality(inv);
  ck.check(fr >= BigInt(static_cast<unsigned long>(n - 2)),
           "fr(A2^-1) = " + fr.get_str() + " >= n-2 = " + std::to_string(n - 2),
           "fr = " + fr.get_str());
  if (n > 3) {
    const Rational alternative = make_rational(static_cast<long>(n - 3), static_cast<long>(n));
    ck.note(std::string("alternative diagonal reading (n'-1)/n ") +
            (inv(1, 1) == alternative ? "holds" : "does not hold") + ": true value " +
            to_string(inv(1, 1)));
  }
}

void verify_lemma5_p1(const FamilySpec& spec, const Generated& g, Checker& ck) {
  const MipDescriptor& d = as_descriptor(g);
  const std::size_t n = spec.n;
  const Rational target = make_rational(1, static_cast<long>(n));
  const RationalVector uniform(n, target);
  auto objective = [](const RationalVector& x) {
    Rational s = 0;
    for (const auto& v : x) s += v * v;
    return s;
  };
  ck.check(!d.constraints.violation(uniform), "uniform point 1/n is feasible");
  ck.check(objective(uniform) == target, "objective at uniform point is exactly 1/" +
                                             std::to_string(n));
  ck.check(dual_graph(d.constraints.matrix()).vertex_count() == 1,
           "dual graph is a single vertex");
  Rng rng(spec.seed);
  constexpr int kSamples = 1000;
  for (int s = 0; s < kSamples; ++s) {
    std::vector<long> w(n);
    long total = 0;
    while (total == 0) {
      total = 0;
      for (auto& wi : w) total += (wi = rng.uniform(0, 1000));
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = make_rational(w[i], total);
    if (d.constraints.violation(x) || objective(x) < target) {
      ck.check(false, "sampled feasible points never beat 1/n",
               "sample " + std::to_string(s) + " objective " + to_string(objective(x)));
      return;
    }
  }
  ck.check(true, std::to_string(kSamples) + " sampled feasible points never beat 1/n");
}

void verify_lemma5_p2(const FamilySpec& spec, const Generated& g, Checker& ck) {
  const MipDescriptor& d = as_descriptor(g);
  const Rational target = make_rational(1, static_cast<long>(spec.k));
  const auto& p = d.polynomial;
  const Rational vertex = -p[1] / (2 * p[2]);
  ck.check(p[2] > 0 && vertex == target,
           "stationary point -b/(2a) = " + to_string(vertex) + " equals 1/k");
  ck.check(eval_poly(p, target) == 0, "f(1/k) = 0, so 1/k is the unique minimizer");
  ck.check(vertex.get_den() == BigInt(static_cast<unsigned long>(spec.k)),
           "minimizer has denominator k = " + std::to_string(spec.k));
}

void verify_lemma5_p3(const Generated& g, Checker& ck) {
  const MipDescriptor& d = as_descriptor(g);
  const auto& p = d.polynomial;
  long double lo = 0;
  long double hi = 1;
  const long double phi = (std::sqrt(5.0L) - 1) / 2;
  long double x1 = hi - phi * (hi - lo);
  long double x2 = lo + phi * (hi - lo);
  long double f1 = eval_poly(p, x1);
  long double f2 = eval_poly(p, x2);
  while (hi - lo > 1e-12L) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = eval_poly(p, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = eval_poly(p, x2);
    }
  }
  const long double xmin = (lo + hi) / 2;
  const long double exact = (std::sqrt(7.0L) - 2) / 3;
  char buf[96];
  std::snprintf(buf, sizeof buf, "golden-section minimizer %.12Lf within 1e-6 of %.12Lf",
                xmin, exact);
  ck.check(std::fabs(xmin - exact) <= 1e-6L, buf);

  // f'(x) = 3x^2 + 4x - 1 has rational roots only among +-1, +-1/3.
  const std::vector<Rational> deriv = {p[1], 2 * p[2], 3 * p[3]};
  bool rational_root = false;
  for (const Rational& r : {Rational(1), Rational(-1), Rational(1, 3), Rational(-1, 3)}) {
    if (eval_poly(deriv, r) == 0) rational_root = true;
  }
  ck.check(!rational_root, "f' has no rational root, so the minimizer is irrational");

  const long double fmin = eval_poly(p, exact);
  bool attained = false;
  for (long q = 1; q <= 50 && !attained; ++q) {
    for (long num = 0; num <= q; ++num) {
      if (static_cast<long double>(eval_poly(p, make_rational(num, q)).get_d()) <= fmin) {
        attained = true;
      }
    }
  }
  ck.check(!attained, "no rational p/q with q <= 50 attains the minimum");
}

void verify_structured(const FamilySpec& spec, const Generated& g, Checker& ck) {
  const RationalMatrix& a = as_matrix(g);
  const TdDecomposition f = two_stage_decomposition(spec.n, spec.t);
  const Graph graph = spec.family == Family::kTwoStage ? primal_graph(a) : dual_graph(a);
  ck.check(validate_td(graph, f), "block decomposition validates on the " +
                                      std::string(spec.family == Family::kTwoStage
                                                      ? "primal"
                                                      : "dual") +
                                      " graph");
  const TdStats st = td_stats(f);
  ck.check(st.topological_height == (spec.n >= 2 ? 2u : 1u) && st.height == 2 * spec.t,
           "decomposition has height 2t and ttd 2");
  ck.check(a.max_abs() <= spec.magnitude, "entries bounded by the magnitude");
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : kNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

void validate(const FamilySpec& spec) {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
  };
  switch (spec.family) {
    case Family::kLemma4A1:
      need(spec.n >= 1, "lemma4_a1 needs n >= 1");
      break;
    case Family::kLemma4A2:
      need(spec.n >= 3, "lemma4_a2 needs n >= 3");
      break;
    case Family::kLemma5P1:
      need(spec.n >= 1, "lemma5_p1 needs n >= 1");
      break;
    case Family::kLemma5P2:
      need(spec.k >= 1, "lemma5_p2 needs k >= 1");
      break;
    case Family::kLemma5P3:
      break;
    case Family::kNFold:
    case Family::kTwoStage:
      need(spec.n >= 1 && spec.t >= 1, "block families need n, t >= 1");
      need(spec.magnitude >= 1, "block families need magnitude >= 1");
      break;
    case Family::kRandomTd:
      need(spec.n >= 1 && spec.k >= 1, "random_td needs n, k >= 1");
      need(spec.magnitude >= 1, "random_td needs magnitude >= 1");
      break;
    case Family::kRandomMilp:
      need(spec.n >= 1 && spec.ints <= spec.n, "random_milp needs n >= 1 and ints <= n");
      break;
    case Family::kRandomIlp:
      need(spec.n >= 1, "random_ilp needs n >= 1");
      break;
  }
}

RationalMatrix lemma4_a1_inverse(std::size_t n) {
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      BigInt den;
      mpz_ui_pow_ui(den.get_mpz_t(), 2, j - i + 1);
      inv(i, j) = Rational(BigInt(1), den);
    }
  }
  return inv;
}

RationalMatrix lemma4_a2_inverse(std::size_t n) {
  if (n < 3) throw ValidationError("lemma4_a2 needs n >= 3");
  const long np = static_cast<long>(n) - 2;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == 0 && j == 0) {
        inv(i, j) = Rational(-1, np);
      } else if (i == 0 || j == 0) {
        inv(i, j) = Rational(1, np);
      } else if (i == j) {
        inv(i, j) = make_rational(np - 1, np);
      } else {
        inv(i, j) = Rational(-1, np);
      }
    }
  }
  return inv;
}

TdDecomposition two_stage_decomposition(std::size_t bricks, std::size_t t) {
  std::vector<std::size_t> parent(t + bricks * t, kNoParent);
  for (std::size_t j = 1; j < t; ++j) parent[j] = j - 1;
  for (std::size_t b = 0; b < bricks; ++b) {
    const std::size_t base = t + b * t;
    parent[base] = t - 1;
    for (std::size_t j = 1; j < t; ++j) parent[base + j] = base + j - 1;
  }
  return TdDecomposition(std::move(parent));
}

std::pair<RationalMatrix, TdDecomposition> generate_random_td(const FamilySpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  const std::size_t n = spec.n;
  const std::size_t m = spec.m == 0 ? n : spec.m;
  const long a = small(spec.magnitude, "magnitude");
  std::vector<std::size_t> parent(n, kNoParent), depth(n, 1);
  for (std::size_t v = 1; v < n; ++v) {
    std::vector<std::size_t> candidates;
    for (std::size_t u = 0; u < v; ++u) {
      if (depth[u] < spec.k) candidates.push_back(u);
    }
    const auto pick = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(candidates.size())));
    if (pick < candidates.size()) {
      parent[v] = candidates[pick];
      depth[v] = depth[parent[v]] + 1;
    }
  }
  RationalMatrix mat(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const auto v = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    mat(i, v) = rng.nonzero(a);
    for (std::size_t u = parent[v]; u != kNoParent; u = parent[u]) {
      if (rng.coin()) mat(i, u) = rng.nonzero(a);
    }
  }
  return {std::move(mat), TdDecomposition(std::move(parent))};
}

Generated generate(const FamilySpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::kLemma4A1:
      return lemma4_a1(spec.n);
    case Family::kLemma4A2:
      return lemma4_a2(spec.n);
    case Family::kLemma5P1: {
      MipDescriptor d;
      d.family = spec.family;
      const std::size_t n = spec.n;
      d.constraints.a_int = RationalMatrix(1, 0);
      d.constraints.a_frac = RationalMatrix(1, n);
      for (std::size_t j = 0; j < n; ++j) d.constraints.a_frac(0, j) = 1;
      d.constraints.b = {1};
      d.constraints.c.assign(n, 0);
      d.constraints.lower.assign(n, 0);
      d.constraints.upper.assign(n, 1);
      d.objective = "sum_i x_i^2";
      return d;
    }
    case Family::kLemma5P2:
    case Family::kLemma5P3: {
      MipDescriptor d;
      d.family = spec.family;
      d.constraints.a_int = RationalMatrix(0, 0);
      d.constraints.a_frac = RationalMatrix(0, 1);
      d.constraints.c = {0};
      d.constraints.lower = {0};
      d.constraints.upper = {1};
      if (spec.family == Family::kLemma5P2) {
        const Rational inv_k = make_rational(1, static_cast<long>(spec.k));
        d.objective = "(x - 1/" + std::to_string(spec.k) + ")^2";
        d.polynomial = {inv_k * inv_k, -2 * inv_k, 1};
      } else {
        d.objective = "x^3 + 2x^2 - x";
        d.polynomial = {0, -1, 2, 1};
      }
      return d;
    }
    case Family::kNFold:
    case Family::kTwoStage: {
      Rng rng(spec.seed);
      RationalMatrix m = two_stage(spec.n, spec.t, small(spec.magnitude, "magnitude"), rng);
      if (spec.family == Family::kNFold) m = m.transpose();
      return m;
    }
    case Family::kRandomTd:
      return generate_random_td(spec).first;
    case Family::kRandomMilp:
      return random_mixed(spec, spec.ints);
    case Family::kRandomIlp:
      return random_mixed(spec, spec.n);
  }
  throw ValidationError("unknown family");
}

MilpInstance reduce_ilp_to_milp(const IlpInstance& ilp) {
  ilp.validate();
  const std::size_t m = ilp.rows();
  const std::size_t n = ilp.vars();
  MilpInstance out;
  out.a_int = vstack(RationalMatrix(m, n), RationalMatrix::identity(n));
  out.a_frac = vstack(ilp.a, -RationalMatrix::identity(n));
  out.b = ilp.b;
  out.b.resize(m + n, 0);
  out.c.assign(n, 0);
  out.c.insert(out.c.end(), ilp.c.begin(), ilp.c.end());
  out.lower = ilp.lower;
  out.lower.insert(out.lower.end(), ilp.lower.begin(), ilp.lower.end());
  out.upper = ilp.upper;
  out.upper.insert(out.upper.end(), ilp.upper.begin(), ilp.upper.end());
  return out;
}

VerificationReport verify_family(const FamilySpec& spec, const Generated& generated) {
  validate(spec);
  Checker ck;
  switch (spec.family) {
    case Family::kLemma4A1:
      verify_lemma4_a1(spec, generated, ck);
      break;
    case Family::kLemma4A2:
      verify_lemma4_a2(spec, generated, ck);
      break;
    case Family::kLemma5P1:
      verify_lemma5_p1(spec, generated, ck);
      break;
    case Family::kLemma5P2:
      verify_lemma5_p2(spec, generated, ck);
      break;
    case Family::kLemma5P3:
      verify_lemma5_p3(generated, ck);
      break;
    case Family::kNFold:
    case Family::kTwoStage:
      verify_structured(spec, generated, ck);
      break;
    case Family::kRandomTd: {
      const auto [a, f] = generate_random_td(spec);
      ck.check(a == as_matrix(generated), "matrix regenerates identically from the seed");
      ck.check(validate_td(primal_graph(a), f), "drawing forest validates on the primal graph");
      ck.check(td_stats(f).height <= spec.k, "drawing forest has height <= k");
      break;
    }
    case Family::kRandomMilp:
    case Family::kRandomIlp: {
      const auto* inst = std::get_if<MilpInstance>(&generated);
      if (inst == nullptr) throw ValidationError("expected a generated instance");
      inst->validate();
      ck.check(true, "instance is well formed");
      break;
    }
  }
  return ck.take();
}

}  // namespace milptd
