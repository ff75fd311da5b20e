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


#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "milptd/error.hpp"
#include "milptd/instance_io.hpp"

namespace milptd {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

constexpr const char* kHalf = "MILP v1\nvars 1\nints\nobj 0\nrow 2 = 1\nlb 0\nub 1\n";

TEST(InstanceFile, MinimalFile) {
  const ParsedInstance p = parse_instance(kHalf);
  EXPECT_EQ(p.instance.z(), 0u);
  EXPECT_EQ(p.instance.a_frac, (RationalMatrix{{2}}));
  EXPECT_EQ(p.instance.b, (IntVector{1}));
}

TEST(InstanceFile, CanonicalRoundTrip) {
  EXPECT_EQ(serialize(parse_instance(kHalf)), kHalf);
  const std::string f =
      "MILP v1\nvars 3\nints 0 2\nobj 1 -2 3\nrow 1 2 3 = 4\nrow 0 -1 1 = 0\n"
      "lb -1 0 -2\nub 1 5 2\n";
  EXPECT_EQ(serialize(parse_instance(f)), f);
}

TEST(InstanceFile, IntsArePermutedFirst) {
  const std::string f = "MILP v1\nvars 3\nints 0 2\nrow 1 2 3 = 4\nlb 0 0 0\nub 1 1 1\n";
  const ParsedInstance p = parse_instance(f);
  EXPECT_EQ(p.instance.z(), 2u);
  EXPECT_EQ(p.instance.q(), 1u);
  EXPECT_EQ(p.file_column, (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_EQ(p.instance.a_int, (RationalMatrix{{1, 3}}));
  EXPECT_EQ(p.instance.a_frac, (RationalMatrix{{2}}));
  const RationalVector x{1, 0, make_rational(3, 2)};
  EXPECT_EQ(p.to_file_order(x), (RationalVector{1, make_rational(3, 2), 0}));
}

TEST(InstanceFile, RationalRowsAreScaled) {
  const ParsedInstance p =
      parse_instance("MILP v1\nvars 2\nrow 1/2 1/3 = 1\nlb 0 0\nub 3 3\n");
  EXPECT_EQ(p.instance.a_frac, (RationalMatrix{{3, 2}}));
  EXPECT_EQ(p.instance.b, (IntVector{6}));
}

TEST(InstanceFile, Errors) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("MILP v2\n"), 1u);
  EXPECT_EQ(line_of("MILP v1\nvars 1\n# c\nrow 1 2\n"), 4u);
  EXPECT_EQ(line_of("MILP v1\nvars 1\nineq 1 = 2\n"), 3u);
  EXPECT_EQ(line_of("MILP v1\nvars 1\nobj 1/2\n"), 3u);
  EXPECT_EQ(line_of("MILP v1\nvars 1\nbogus\n"), 3u);
  EXPECT_THROW(parse_instance("MILP v1\nvars 2\nrow 1 = 1\nlb 0 0\nub 1 1\n"), DimensionError);
  EXPECT_THROW(parse_instance("MILP v1\nvars 2\nints 5\nlb 0 0\nub 1 1\n"), DimensionError);
  EXPECT_THROW(parse_instance("MILP v1\nvars 1\nlb 2\nub 1\n"), ParseError);
}

TEST(Cli, SolveHalf) {
  const CliRun r = run_cli({"solve"}, kHalf);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("x0 = 1/2"), std::string::npos) << r.out;
}

TEST(Cli, SolveAndOracleAgree) {
  const std::string f =
      "MILP v1\nvars 3\nints 0\nobj 1 -1 2\nrow 1 2 1 = 3\nrow 2 0 -1 = 1\nlb -2 -3 -3\nub 2 3 3\n";
  const CliRun s = run_cli({"solve", "--format", "machine"}, f);
  const CliRun o = run_cli({"oracle", "--format", "machine"}, f);
  ASSERT_EQ(s.code, o.code);
  auto objective = [](const std::string& out) {
    const auto p = out.find("objective=");
    return p == std::string::npos ? std::string() : out.substr(p, out.find('\n', p) - p);
  };
  EXPECT_EQ(objective(s.out), objective(o.out));
  EXPECT_FALSE(objective(s.out).empty());
}

TEST(Cli, GenInvertBidiagonal) {
  const CliRun g = run_cli({"gen", "lemma4_a1", "--n", "5"});
  ASSERT_EQ(g.code, 0);
  const CliRun i = run_cli({"invert", "--format", "machine"}, g.out);
  EXPECT_EQ(i.code, 0) << i.err;
  EXPECT_NE(i.out.find("fr=32\n"), std::string::npos) << i.out;
  EXPECT_NE(i.out.find("match=true\n"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"solve"}, "MILP v1\nvars x\n").code, 2);
  EXPECT_EQ(run_cli({"solve"}, "MILP v1\nvars 1\nints 0\nrow 2 = 1\nlb 0\nub 1\n").code, 1);
  EXPECT_EQ(run_cli({"invert"}, "1 1\n1 1\n").code, 2);
  EXPECT_EQ(run_cli({"bound", "--special", "nfold", "--t", "40", "--bit-cap", "64"}, "50\n").code, 3);
  EXPECT_EQ(run_cli({"gen", "lemma4_a2", "--n", "2"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, ReduceAndVerify) {
  const std::string ilp = "MILP v1\nvars 1\nints 0\nrow 2 = 3\nlb -5\nub 5\n";
  const CliRun r = run_cli({"reduce"}, ilp);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run_cli({"oracle"}, r.out).code, 1);
  EXPECT_EQ(run_cli({"reduce"}, kHalf).code, 2);
  const CliRun v = run_cli({"verify", "lemma4_a2", "--n", "6", "--format", "machine"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("passed=true"), std::string::npos);
}

TEST(Cli, AnalyzeAndBound) {
  const CliRun g = run_cli({"gen", "twostage", "--n", "2", "--t", "1", "--seed", "3"});
  const CliRun a = run_cli({"analyze", "--format", "machine"}, g.out);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.out.find("primal_ttd=2"), std::string::npos) << a.out;
  EXPECT_NE(a.out.find("trace0=node"), std::string::npos);
  const CliRun b = run_cli({"bound", "--special", "twostage", "--t", "1", "--format", "machine"}, g.out);
  EXPECT_EQ(b.code, 0) << b.err;
  EXPECT_NE(b.out.find("bound=4\n"), std::string::npos) << b.out;
}

}  // namespace
}  // namespace milptd
