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


#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>

#include "milptd/block_structure.hpp"
#include "milptd/error.hpp"
#include "milptd/fractionality.hpp"
#include "milptd/graph.hpp"
#include "milptd/ilp.hpp"
#include "milptd/instance_io.hpp"
#include "milptd/instances.hpp"
#include "milptd/linalg.hpp"
#include "milptd/pipeline.hpp"
#include "milptd/record.hpp"
#include "milptd/treedepth.hpp"

namespace milptd::cli {

namespace {

// Values past this many bits are reported by their log2 only.
constexpr std::size_t kPrintBits = 4096;

struct Options {
  std::string input = "-";
  std::string family;
  std::string side = "auto";
  std::string format = "text";
  std::string special;
  std::optional<std::string> scale;
  std::size_t exact_td_cap = kDefaultExactTdCap;
  std::size_t bit_cap = kDefaultBitCap;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::size_t node_limit = kDefaultNodeLimit;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t t = 1;
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t ints = 0;
  long magnitude = 2;
  long box = 3;
};

BigInt parse_int(const std::string& text, const char* what) {
  const Rational v = parse_rational(text);
  if (!is_integral(v)) throw ValidationError(std::string(what) + " must be an integer");
  return v.get_num();
}

std::string read_input(const Options& o, std::istream& in) {
  std::ostringstream buf;
  if (o.input == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(o.input);
    if (!file) throw ValidationError("cannot open '" + o.input + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

bool is_instance_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return line.compare(first, 4, "MILP") == 0;
  }
  return false;
}

// Matrix commands accept either a bare matrix or an instance file, whose
// constraint matrix is used in file column order.
RationalMatrix read_matrix(const std::string& text) {
  if (!is_instance_text(text)) return parse_matrix(text);
  const ParsedInstance p = parse_instance(text);
  const RationalMatrix a = p.instance.matrix();
  std::vector<std::size_t> slot(a.cols());
  for (std::size_t k = 0; k < a.cols(); ++k) slot[p.file_column[k]] = k;
  std::vector<std::size_t> rows(a.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return a.select(rows, slot);
}

void set_big(Record& r, const std::string& key, const BigInt& v) {
  if (bit_length(v) <= kPrintBits) {
    r.set(key, v);
  } else {
    r.set_log2(key + "_log2", log2_abs(v));
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

void set_stats(Record& r, const std::string& prefix, const TdStats& s) {
  r.set(prefix + "_height", s.height);
  r.set(prefix + "_ttd", s.topological_height);
  r.set(prefix + "_levels", join(s.level_heights));
}

void emit(const Options& o, const Record& r, std::ostream& out) {
  out << (o.format == "machine" ? r.machine() : r.text());
}

Side pick_side(const std::string& side, const TdStats& primal, const TdStats& dual) {
  if (side == "primal") return Side::kPrimal;
  if (side == "dual") return Side::kDual;
  return primal.height <= dual.height ? Side::kPrimal : Side::kDual;
}

int cmd_analyze(const Options& o, std::istream& in, std::ostream& out) {
  const RationalMatrix a = read_matrix(read_input(o, in));
  const TdDecomposition fp = td_decompose(primal_graph(a), o.exact_td_cap);
  const TdDecomposition fd = td_decompose(dual_graph(a), o.exact_td_cap);
  Record r;
  r.set("command", "analyze");
  r.set("rows", a.rows());
  r.set("cols", a.cols());
  r.set("magnitude", a.max_abs());
  set_stats(r, "primal", td_stats(fp));
  r.set("primal_forest", to_string(fp));
  set_stats(r, "dual", td_stats(fd));
  r.set("dual_forest", to_string(fd));
  std::istringstream trace(trace_text(a, fp));
  std::size_t i = 0;
  for (std::string line; std::getline(trace, line); ++i) {
    r.set("trace" + std::to_string(i), line);
  }
  emit(o, r, out);
  return kOk;
}

int cmd_bound(const Options& o, std::istream& in, std::ostream& out) {
  const RationalMatrix a = read_matrix(read_input(o, in));
  FractionalityCertificate cert;
  if (!o.special.empty()) {
    if (o.special != "nfold" && o.special != "twostage") {
      throw ValidationError("--special must be nfold or twostage");
    }
    cert = frac_bound_special(std::max(a.max_abs(), BigInt(1)), o.t,
                              o.special == "nfold" ? SpecialFamily::kNFold
                                                   : SpecialFamily::kTwoStage,
                              o.bit_cap);
  } else {
    const TdDecomposition fp = td_decompose(primal_graph(a), o.exact_td_cap);
    const TdDecomposition fd = td_decompose(dual_graph(a), o.exact_td_cap);
    const Side side = pick_side(o.side, td_stats(fp), td_stats(fd));
    cert = frac_bound(a, side == Side::kPrimal ? fp : fd, side, o.bit_cap);
  }
  Record r;
  r.set("command", "bound");
  r.set("method", cert.method);
  r.set("side", to_string(cert.side));
  if (!cert.constant.empty()) r.set("constant", cert.constant);
  r.set("size", cert.size);
  r.set("magnitude", cert.magnitude);
  if (cert.method == "generic") set_stats(r, "td", cert.stats);
  set_big(r, "bound", cert.bound);
  r.set_log2("log2_bound", cert.log2_bound);
  r.set("bit_cap", cert.bit_cap);
  for (std::size_t i = 0; i < cert.trace.size(); ++i) {
    const CertificateLevel& l = cert.trace[i];
    std::string line = "h=" + std::to_string(l.height) + " t=" + std::to_string(l.ttd) +
                       " s=" + std::to_string(l.size) + " k1<=" +
                       std::to_string(l.level_height) + " a=" + l.magnitude.str() +
                       " fr<=" + l.bound.str();
    r.set("class" + std::to_string(i), line);
  }
  emit(o, r, out);
  return kOk;
}

PipelineOptions pipeline_options(const Options& o) {
  PipelineOptions p;
  p.side = o.side == "primal" ? SideChoice::kPrimal
           : o.side == "dual" ? SideChoice::kDual
                              : SideChoice::kAuto;
  if (o.scale) p.scale = parse_int(*o.scale, "--scale");
  p.exact_td_cap = o.exact_td_cap;
  p.bit_cap = o.bit_cap;
  p.oracle_cap = o.oracle_cap;
  p.node_limit = o.node_limit;
  return p;
}

void set_solution(Record& r, const ParsedInstance& p, const SolveResult& res) {
  r.set("status", to_string(res.status));
  if (res.status != SolveStatus::kOptimal) return;
  r.set("objective", res.objective);
  const RationalVector x = p.to_file_order(res.x);
  for (std::size_t j = 0; j < x.size(); ++j) r.set("x" + std::to_string(j), x[j]);
}

int cmd_solve(const Options& o, std::istream& in, std::ostream& out) {
  const ParsedInstance p = parse_instance(read_input(o, in));
  const MilpSolution sol = milp_solve(p.instance, pipeline_options(o));
  const PipelineReport& rep = sol.report;
  Record r;
  r.set("command", "solve");
  set_solution(r, p, sol.result);
  r.set("side", to_string(rep.side));
  set_stats(r, "primal", rep.primal);
  set_stats(r, "dual", rep.dual);
  r.set("m_source", to_string(rep.m_source));
  set_big(r, "m", rep.m);
  set_big(r, "scale", rep.scale);
  r.set("scale_scheme", rep.scale_scheme);
  r.set("certificate_capped", rep.certificate_capped);
  if (rep.certificate_capped || rep.m_source == MSource::kCertificate) {
    r.set_log2("certificate_log2", rep.certificate_log2);
  }
  r.set("ilp_nodes", rep.ilp_nodes);
  r.set("pivots", rep.pivots);
  emit(o, r, out);
  return sol.result.status == SolveStatus::kOptimal ? kOk : kInfeasible;
}

int cmd_oracle(const Options& o, std::istream& in, std::ostream& out) {
  const ParsedInstance p = parse_instance(read_input(o, in));
  const SolveResult res = milp_oracle(p.instance, o.oracle_cap);
  Record r;
  r.set("command", "oracle");
  set_solution(r, p, res);
  r.set("points", res.stats.nodes);
  r.set("pivots", res.stats.pivots);
  emit(o, r, out);
  return res.status == SolveStatus::kOptimal ? kOk : kInfeasible;
}

int cmd_invert(const Options& o, std::istream& in, std::ostream& out) {
  const RationalMatrix a = read_matrix(read_input(o, in));
  const TdDecomposition f = td_decompose(primal_graph(a), o.exact_td_cap);
  const StructuredInverse s = structured_inverse(a, f);
  const RationalMatrix direct = mat_inverse(a);
  const bool match = s.inverse == direct && replay(s.trace) == direct;
  Record r;
  r.set("command", "invert");
  r.set("size", a.rows());
  set_stats(r, "primal", td_stats(f));
  r.set("fr", fractionality(s.inverse));
  r.set("match", match);
  for (std::size_t i = 0; i < s.inverse.rows(); ++i) {
    std::string row;
    for (std::size_t j = 0; j < s.inverse.cols(); ++j) {
      if (j > 0) row += ' ';
      row += to_string(s.inverse(i, j));
    }
    r.set("inverse" + std::to_string(i), row);
  }
  std::istringstream trace(to_string(s.trace));
  std::size_t i = 0;
  for (std::string line; std::getline(trace, line); ++i) {
    r.set("trace" + std::to_string(i), line);
  }
  emit(o, r, out);
  if (!match) throw InvariantError("structured inverse disagrees with direct inversion");
  return kOk;
}

FamilySpec family_spec(const Options& o) {
  const auto family = parse_family(o.family);
  if (!family) throw ValidationError("unknown family '" + o.family + "'");
  FamilySpec spec;
  spec.family = *family;
  spec.n = o.n;
  spec.m = o.m;
  spec.t = o.t;
  spec.k = o.k;
  spec.ints = o.ints;
  spec.seed = o.seed;
  spec.magnitude = o.magnitude;
  spec.box = o.box;
  return spec;
}

std::string descriptor_text(const FamilySpec& spec, const MipDescriptor& d) {
  std::string out = "# family " + std::string(to_string(spec.family)) + "\n";
  out += "# objective " + d.objective + "\n";
  if (!d.polynomial.empty()) {
    out += "# polynomial";
    for (const Rational& c : d.polynomial) out += " " + to_string(c);
    out += "\n";
  }
  return out + serialize(d.constraints);
}

int cmd_gen(const Options& o, std::ostream& out) {
  const FamilySpec spec = family_spec(o);
  const Generated g = generate(spec);
  if (const auto* m = std::get_if<RationalMatrix>(&g)) {
    out << "# family " << to_string(spec.family) << "\n" << to_string(*m);
  } else if (const auto* inst = std::get_if<MilpInstance>(&g)) {
    out << "# family " << to_string(spec.family) << "\n" << serialize(*inst);
  } else {
    out << descriptor_text(spec, std::get<MipDescriptor>(g));
  }
  return kOk;
}

int cmd_reduce(const Options& o, std::istream& in, std::ostream& out) {
  const ParsedInstance p = parse_instance(read_input(o, in));
  if (p.instance.q() != 0) {
    throw ValidationError("reduce expects a pure integer instance (all variables in 'ints')");
  }
  // Integer columns keep file order here since z = n.
  IlpInstance ilp{p.instance.a_int, p.instance.b, p.instance.c, p.instance.lower,
                  p.instance.upper};
  out << serialize(reduce_ilp_to_milp(ilp));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const FamilySpec spec = family_spec(o);
  const VerificationReport rep = verify_family(spec, generate(spec));
  Record r;
  r.set("command", "verify");
  r.set("family", std::string(to_string(spec.family)));
  r.set("passed", rep.passed);
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    r.set("check" + std::to_string(i), rep.checks[i]);
  }
  if (!rep.passed) r.set("counterexample", rep.counterexample);
  emit(o, r, out);
  return rep.passed ? kOk : kInvariant;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));
  sub->add_option("--exact-td-cap", o.exact_td_cap, "Largest graph for exact treedepth");
  sub->add_option("--bit-cap", o.bit_cap, "Bit budget for exact bounds");
  sub->add_option("--seed", o.seed, "RNG seed");
}

void add_side(CLI::App* sub, Options& o) {
  sub->add_option("--side", o.side, "Graph side for the certificate")
      ->check(CLI::IsMember({"primal", "dual", "auto"}));
}

void add_family(CLI::App* sub, Options& o) {
  sub->add_option("family", o.family, "Instance family")->required();
  sub->add_option("--n", o.n, "Size, or number of bricks");
  sub->add_option("--t", o.t, "Brick size");
  sub->add_option("--k", o.k, "Height cap (random_td) or denominator (lemma5_p2)");
  sub->add_option("--m", o.m, "Rows for random families");
  sub->add_option("--ints", o.ints, "Integer variables for random_milp");
  sub->add_option("--magnitude", o.magnitude, "Entry magnitude");
  sub->add_option("--box", o.box, "Bound radius for random instances");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Exact MILP solving via treedepth-bounded fractionality", "milptd"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Treedepth statistics and block structure");
  auto* bound = app.add_subcommand("bound", "Fractionality certificate");
  auto* solve = app.add_subcommand("solve", "Solve a MILP exactly");
  auto* oracle = app.add_subcommand("oracle", "Solve by enumerating the integer box");
  auto* invert = app.add_subcommand("invert", "Structured inverse, cross-checked");
  auto* gen = app.add_subcommand("gen", "Generate an instance family");
  auto* reduce = app.add_subcommand("reduce", "Reduce an ILP to a MILP");
  auto* verify = app.add_subcommand("verify", "Verify a family's claimed properties");

  for (auto* sub : {analyze, bound, solve, oracle, invert, reduce}) {
    sub->add_option("input", o.input, "Input file, '-' for stdin");
  }
  for (auto* sub : {analyze, bound, solve, oracle, invert, gen, reduce, verify}) {
    add_common(sub, o);
  }
  add_side(bound, o);
  add_side(solve, o);
  bound->add_option("--special", o.special, "Closed-form certificate: nfold or twostage");
  bound->add_option("--t", o.t, "Brick size for --special");
  solve->add_option("--scale", o.scale, "Override the integralization scale");
  solve->add_option("--node-limit", o.node_limit, "Branch and bound node limit");
  oracle->add_option("--oracle-cap", o.oracle_cap, "Largest integer box to enumerate");
  add_family(gen, o);
  add_family(verify, o);

  std::vector<const char*> argv{"milptd"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "milptd: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(o, in, out);
    if (*bound) return cmd_bound(o, in, out);
    if (*solve) return cmd_solve(o, in, out);
    if (*oracle) return cmd_oracle(o, in, out);
    if (*invert) return cmd_invert(o, in, out);
    if (*gen) return cmd_gen(o, out);
    if (*reduce) return cmd_reduce(o, in, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const CapExceededError& e) {
    err << "milptd: cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const InvariantError& e) {
    err << "milptd: invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const FeasibilityError& e) {
    err << "milptd: invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const SingularMatrixError& e) {
    err << "milptd: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "milptd: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "milptd: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "milptd: internal error: " << e.what() << "\n";
    return kInvariant;
  }
  return kUsage;
}

}  // namespace milptd::cli
