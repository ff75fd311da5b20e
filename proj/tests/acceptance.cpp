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


// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "milptd/error.hpp"
#include "milptd/graph.hpp"
#include "milptd/ilp.hpp"
#include "milptd/instances.hpp"
#include "milptd/integralization.hpp"
#include "milptd/linalg.hpp"
#include "milptd/pipeline.hpp"
#include "oracles.hpp"

namespace milptd {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void time_limit(Outcome& o, Clock::time_point t0, double limit) {
  const double s = seconds_since(t0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  if (s >= limit) o.fail(std::string("took ") + buf);
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += buf;
}

Outcome lemma4_a1() {
  const auto t0 = Clock::now();
  Outcome o;
  for (std::size_t n = 2; n <= 12; ++n) {
    FamilySpec s;
    s.family = Family::kLemma4A1;
    s.n = n;
    const RationalMatrix inv = mat_inverse(std::get<RationalMatrix>(generate(s)));
    // Closed form written out independently of the library's version.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Rational want = j < i ? Rational(0) : make_rational(1, BigInt(1) << (j - i + 1));
        if (inv(i, j) != want) o.fail("n=" + std::to_string(n) + " entry mismatch");
      }
    }
    if (fractionality(inv) != BigInt(1) << n) o.fail("n=" + std::to_string(n) + " fr");
    if (n == 10 && fractionality(inv) != 1024) o.fail("fr(10) != 1024");
  }
  o.detail = "fr(A1^-1) = 2^n for n=2..12";
  time_limit(o, t0, 1.0);
  return o;
}

Outcome lemma4_a2() {
  const auto t0 = Clock::now();
  Outcome o;
  std::string frs;
  for (std::size_t n = 4; n <= 12; ++n) {
    FamilySpec s;
    s.family = Family::kLemma4A2;
    s.n = n;
    const RationalMatrix a = std::get<RationalMatrix>(generate(s));
    const RationalMatrix inv = mat_inverse(a);
    const BigInt fr = fractionality(inv);
    if (fr < BigInt(static_cast<unsigned long>(n - 2))) o.fail("fr < n-2 at n=" + std::to_string(n));
    if (inv != lemma4_a2_inverse(n)) o.fail("closed form mismatch at n=" + std::to_string(n));
    // The diagonal entry is (n'-1)/n' with n' = n-2, not (n'-1)/n.
    if (inv(1, 1) != make_rational(static_cast<long>(n) - 3, static_cast<long>(n) - 2)) {
      o.fail("diagonal reading");
    }
    frs += (frs.empty() ? "" : ",") + fr.get_str();
  }
  o.detail = "fr=" + frs + "; diagonal (n'-1)/n' holds";
  time_limit(o, t0, 1.0);
  return o;
}

Outcome structured_equivalence() {
  const auto t0 = Clock::now();
  Outcome o;
  std::size_t done = 0;
  std::size_t drawn = 0;
  std::size_t split = 0;
  std::size_t peels = 0;
  for (std::uint64_t seed = 0; done < 200; ++seed) {
    FamilySpec s;
    s.family = Family::kRandomTd;
    s.n = 1 + seed % 10;
    s.m = s.n;
    s.k = 2 + seed % 4;
    s.seed = seed;
    s.magnitude = 3;
    const RationalMatrix a = std::get<RationalMatrix>(generate(s));
    ++drawn;
    if (mat_det(a) == 0) continue;
    // Cap 0: every component goes to the heuristic.
    const TdDecomposition f = td_decompose(primal_graph(a), 0);
    if (td_stats(f).height > 6) continue;
    const StructuredInverse si = structured_inverse(a, f);
    const std::function<void(const StructuredInverseTrace&)> tally =
        [&](const StructuredInverseTrace& t) {
          split += t.kind == StructuredInverseTrace::Kind::kSplit;
          peels += t.peels.size();
          for (const auto& c : t.children) tally(c);
        };
    tally(si.trace);
    const RationalMatrix direct = mat_inverse(a);
    if (si.inverse != direct || replay(si.trace) != direct) {
      o.fail("mismatch at seed " + std::to_string(seed));
    }
    ++done;
  }
  o.detail = std::to_string(done) + " invertible of " + std::to_string(drawn) + " drawn, " +
             std::to_string(split) + " split nodes, " + std::to_string(peels) + " peels";
  time_limit(o, t0, 30.0);
  return o;
}

Outcome certificate_soundness() {
  const auto t0 = Clock::now();
  Outcome o;
  std::size_t exact = 0, capped = 0;
  BigInt worst_emp = 1;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    FamilySpec s;
    s.family = Family::kRandomTd;
    s.n = 3 + seed % 7;
    s.m = 1 + seed % std::min<std::size_t>(6, s.n);
    s.k = 3;
    s.seed = 1000 + seed;
    s.magnitude = 2;
    const RationalMatrix a = std::get<RationalMatrix>(generate(s));
    const TdDecomposition f = td_decompose(primal_graph(a));
    if (td_stats(f).height > 3) o.fail("td > 3 at seed " + std::to_string(seed));
    const std::size_t m = a.rows(), n = a.cols();
    BigInt emp = 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != m) continue;
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < n; ++j) {
        if (mask >> j & 1) cols.push_back(j);
      }
      const RationalMatrix sub = a.select_cols(cols);
      if (mat_det(sub) != 0) emp = std::max(emp, fractionality(mat_inverse(sub)));
    }
    worst_emp = std::max(worst_emp, emp);
    try {
      const FractionalityCertificate c = frac_bound(a, f, Side::kPrimal);
      ++exact;
      if (emp > c.bound) o.fail("bound violated at seed " + std::to_string(seed));
    } catch (const CapExceededError& e) {
      ++capped;
      if (e.log2_estimate() < log2_abs(emp)) o.fail("log estimate below empirical max");
    }
  }
  o.detail = std::to_string(exact) + " exact, " + std::to_string(capped) +
             " capped, max empirical fr " + worst_emp.get_str();
  time_limit(o, t0, 60.0);
  return o;
}

std::vector<MilpInstance> mixed_corpus() {
  std::vector<MilpInstance> out;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    FamilySpec s;
    s.family = Family::kRandomMilp;
    const std::size_t z = seed % 4;
    const std::size_t q = 1 + (seed / 4) % 4;
    s.n = z + q;
    s.ints = z;
    s.m = 1 + seed % 3;
    s.seed = 5000 + seed;
    s.magnitude = 2;
    s.box = 3;
    out.push_back(std::get<MilpInstance>(generate(s)));
  }
  return out;
}

struct PipelineRuns {
  std::vector<MilpInstance> instances;
  std::vector<MilpSolution> solutions;
};

PipelineRuns& pipeline_runs() {
  static PipelineRuns runs;
  return runs;
}

Outcome pipeline_vs_oracle() {
  const auto t0 = Clock::now();
  Outcome o;
  PipelineRuns& runs = pipeline_runs();
  runs.instances = mixed_corpus();
  std::size_t optimal = 0;
  std::map<std::string, std::size_t> sources;
  for (std::size_t k = 0; k < runs.instances.size(); ++k) {
    const MilpInstance& inst = runs.instances[k];
    runs.solutions.push_back(milp_solve(inst));
    const MilpSolution& s = runs.solutions.back();
    ++sources[to_string(s.report.m_source)];
    const SolveResult ref = milp_oracle(inst);
    const std::string at = " at instance " + std::to_string(k);
    if (s.result.status != ref.status) {
      o.fail("status" + at);
      continue;
    }
    if (s.result.status != SolveStatus::kOptimal) continue;
    ++optimal;
    if (s.result.objective != ref.objective) o.fail("objective" + at);
    for (std::size_t j = inst.z(); j < inst.vars(); ++j) {
      if (s.report.scale % BigInt(s.result.x[j].get_den()) != 0) o.fail("denominator" + at);
    }
  }
  o.detail = std::to_string(optimal) + " optimal of 100; M sources";
  for (const auto& [k, v] : sources) o.detail += " " + k + "=" + std::to_string(v);
  time_limit(o, t0, 60.0);
  return o;
}

Outcome round_trip() {
  Outcome o;
  const PipelineRuns& runs = pipeline_runs();
  std::size_t checked = 0;
  for (std::size_t k = 0; k < runs.solutions.size(); ++k) {
    const MilpSolution& s = runs.solutions[k];
    if (s.result.status != SolveStatus::kOptimal) continue;
    const MilpInstance& inst = runs.instances[k];
    const BigInt& scale = s.report.scale;
    const IlpInstance ilp = integralize(inst, scale);
    const RationalVector z = embed(s.result.x, scale, inst);
    const std::string at = " at instance " + std::to_string(k);
    if (ilp.violation(z)) o.fail("embedded point infeasible for the scaled ILP" + at);
    try {
      if (recover(std::span<const Rational>(z), scale, inst) != s.result.x) o.fail("recover" + at);
    } catch (const FeasibilityError&) {
      o.fail("recovered point infeasible" + at);
    }
    if (inst.violation(s.result.x)) o.fail("solution infeasible" + at);
    if (ilp.objective(z) != scale * inst.objective(s.result.x)) o.fail("objective scaling" + at);
    ++checked;
  }
  if (checked == 0) o.fail("no optimal runs");
  o.detail = std::to_string(checked) + " optimal runs checked";
  return o;
}

Outcome reduction() {
  Outcome o;
  std::size_t feasible = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    FamilySpec s;
    s.family = Family::kRandomIlp;
    s.n = 1 + seed % 4;
    s.m = 1 + seed % 2;
    s.seed = 9000 + seed;
    const auto inst = std::get<MilpInstance>(generate(s));
    const IlpInstance ilp{inst.a_int, inst.b, inst.c, inst.lower, inst.upper};
    const bool f_in = ilp_solve(ilp).status == SolveStatus::kOptimal;
    const bool f_out = milp_oracle(reduce_ilp_to_milp(ilp)).status == SolveStatus::kOptimal;
    if (f_in != f_out) o.fail("disagreement at seed " + std::to_string(seed));
    feasible += f_in;
  }
  o.detail = std::to_string(feasible) + " of 50 feasible";
  return o;
}

Outcome lemma5() {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n) {
    FamilySpec s;
    s.family = Family::kLemma5P1;
    s.n = n;
    s.seed = n;
    const VerificationReport r = verify_family(s, generate(s));
    if (!r.passed) o.fail("p1 n=" + std::to_string(n) + ": " + r.counterexample);
  }
  for (std::size_t k = 2; k <= 10; ++k) {
    FamilySpec s;
    s.family = Family::kLemma5P2;
    s.k = k;
    const VerificationReport r = verify_family(s, generate(s));
    if (!r.passed) o.fail("p2 k=" + std::to_string(k));
  }
  FamilySpec s;
  s.family = Family::kLemma5P3;
  const VerificationReport r = verify_family(s, generate(s));
  if (!r.passed) o.fail("p3: " + r.counterexample);
  o.detail = "p1 n=2..6, p2 k=2..10, p3";
  return o;
}

Outcome treedepth() {
  Outcome o;
  auto check = [&](const Graph& g, std::size_t want, const std::string& name) {
    const TdDecomposition f = td_compute(g, TdMode::kExact);
    if (!validate_td(g, f)) o.fail(name + " decomposition invalid");
    const std::size_t h = td_stats(f).height;
    if (h != want) o.fail(name + " td " + std::to_string(h) + " != " + std::to_string(want));
    if (oracle::SubsetTreedepth(g).treedepth() != h) o.fail(name + " disagrees with subset DP");
  };
  for (std::size_t k = 1; k <= 6; ++k) check(complete_graph(k), k, "K" + std::to_string(k));
  for (std::size_t l = 1; l <= 8; ++l) check(star_graph(l), 2, "star" + std::to_string(l));
  for (std::size_t n = 1; n <= 15; ++n) {
    check(path_graph(n), static_cast<std::size_t>(std::ceil(std::log2(n + 1.0))),
          "P" + std::to_string(n));
  }
  o.detail = "K1..K6, stars, P1..P15";
  return o;
}

std::string run_cli(const std::vector<std::string>& args, const std::string& input, int& code) {
  std::istringstream in(input);
  std::ostringstream out, err;
  code = cli::run(args, in, out, err);
  return out.str() + "\n--\n" + err.str();
}

Outcome determinism() {
  Outcome o;
  int code = 0;
  const std::string milp =
      run_cli({"gen", "random_milp", "--n", "5", "--ints", "2", "--m", "2", "--seed", "7"}, "", code);
  const std::string milp_file = milp.substr(0, milp.find("\n--\n"));
  const std::string ilp =
      run_cli({"gen", "random_ilp", "--n", "3", "--m", "2", "--seed", "8"}, "", code);
  const std::string ilp_file = ilp.substr(0, ilp.find("\n--\n"));
  const std::string two =
      run_cli({"gen", "twostage", "--n", "3", "--t", "1", "--seed", "2"}, "", code);
  const std::string two_file = two.substr(0, two.find("\n--\n"));
  const std::string a1 = "2 -1 0\n0 2 -1\n0 0 2\n";
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"analyze", "--format", "machine"}, two_file},
      {{"bound", "--format", "machine"}, two_file},
      {{"bound", "--special", "twostage", "--t", "1", "--format", "machine"}, two_file},
      {{"solve", "--format", "machine"}, milp_file},
      {{"oracle", "--format", "machine"}, milp_file},
      {{"invert", "--format", "machine"}, a1},
      {{"gen", "random_td", "--n", "9", "--k", "3", "--seed", "11", "--format", "machine"}, ""},
      {{"reduce", "--format", "machine"}, ilp_file},
      {{"verify", "lemma5_p1", "--n", "4", "--seed", "5", "--format", "machine"}, ""},
  };
  for (const auto& [args, input] : cases) {
    int c1 = 0, c2 = 0;
    const std::string r1 = run_cli(args, input, c1);
    const std::string r2 = run_cli(args, input, c2);
    if (r1 != r2 || c1 != c2) o.fail("'" + args[0] + "' output differs between runs");
  }
  o.detail = std::to_string(cases.size()) + " command runs compared";
  return o;
}

}  // namespace
}  // namespace milptd

int main() {
  using milptd::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"lemma4_a1 inverse closed form and fr = 2^n", milptd::lemma4_a1},
      {"lemma4_a2 fr >= n-2 and true closed form", milptd::lemma4_a2},
      {"structured inverse equals direct inverse", milptd::structured_equivalence},
      {"certificate soundness", milptd::certificate_soundness},
      {"pipeline agrees with oracle", milptd::pipeline_vs_oracle},
      {"integralization round trip", milptd::round_trip},
      {"ILP to MILP reduction preserves feasibility", milptd::reduction},
      {"lemma5_* descriptors", milptd::lemma5},
      {"treedepth exact values", milptd::treedepth},
      {"determinism of machine output", milptd::determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %zu %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    failed += !o.pass;
  }
  return failed;
}
