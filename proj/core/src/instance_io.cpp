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


#include "milptd/instance_io.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "milptd/error.hpp"

namespace milptd {

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

Rational number(const std::string& tok, std::size_t line) {
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

BigInt integer(const std::string& tok, std::size_t line, const char* what) {
  const Rational v = number(tok, line);
  if (!is_integral(v)) {
    throw ParseError(line, std::string(what) + " entries must be integers, got '" + tok + "'");
  }
  return v.get_num();
}

std::size_t index(const std::string& tok, std::size_t line) {
  const Rational v = number(tok, line);
  if (!is_integral(v) || v < 0 || !v.get_num().fits_ulong_p()) {
    throw ParseError(line, "bad variable index '" + tok + "'");
  }
  return v.get_num().get_ui();
}

void expect_count(std::size_t got, std::size_t n, std::size_t line, const char* what) {
  if (got != n) {
    throw DimensionError("line " + std::to_string(line) + ": " + what + " has " +
                         std::to_string(got) + " entries, expected " + std::to_string(n));
  }
}

struct RawRow {
  RationalVector coeffs;
  Rational rhs;
  std::size_t line;
};

}  // namespace

RationalVector ParsedInstance::to_file_order(std::span<const Rational> x) const {
  RationalVector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[file_column[k]] = x[k];
  return out;
}

ParsedInstance parse_instance(std::string_view text) {
  std::optional<std::size_t> n;
  std::optional<std::vector<std::size_t>> ints;
  std::optional<IntVector> obj, lb, ub;
  std::vector<RawRow> rows;
  bool header = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<std::string> tok = split(line);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "MILP" || tok[1] != "v1") {
        throw ParseError(line_no, "expected header 'MILP v1'");
      }
      header = true;
      continue;
    }
    const std::string& key = tok[0];
    const std::vector<std::string> args(tok.begin() + 1, tok.end());
    if (key == "vars") {
      if (n) throw ParseError(line_no, "duplicate 'vars'");
      if (args.size() != 1) throw ParseError(line_no, "'vars' takes one count");
      n = index(args[0], line_no);
      continue;
    }
    if (!n) throw ParseError(line_no, "'" + key + "' before 'vars'");
    auto once = [&](bool seen) {
      if (seen) throw ParseError(line_no, "duplicate '" + key + "'");
    };
    if (key == "ints") {
      once(ints.has_value());
      ints.emplace();
      for (const auto& a : args) {
        const std::size_t i = index(a, line_no);
        if (i >= *n) {
          throw DimensionError("line " + std::to_string(line_no) + ": integer index " +
                               a + " out of range");
        }
        ints->push_back(i);
      }
      std::sort(ints->begin(), ints->end());
      if (std::adjacent_find(ints->begin(), ints->end()) != ints->end()) {
        throw ParseError(line_no, "repeated integer index");
      }
    } else if (key == "obj" || key == "lb" || key == "ub") {
      auto& slot = key == "obj" ? obj : key == "lb" ? lb : ub;
      once(slot.has_value());
      expect_count(args.size(), *n, line_no, key.c_str());
      slot.emplace();
      for (const auto& a : args) slot->push_back(integer(a, line_no, key.c_str()));
    } else if (key == "row") {
      if (args.size() < 2 || args[args.size() - 2] != "=") {
        throw ParseError(line_no, "row must end with '= b'");
      }
      expect_count(args.size() - 2, *n, line_no, "row");
      RawRow r{{}, number(args.back(), line_no), line_no};
      for (std::size_t j = 0; j + 2 < args.size(); ++j) r.coeffs.push_back(number(args[j], line_no));
      rows.push_back(std::move(r));
    } else if (key == "ineq") {
      throw ParseError(line_no, "'ineq' rows are reserved and not supported in v1");
    } else {
      throw ParseError(line_no, "unknown directive '" + key + "'");
    }
  }
  if (!header) throw ParseError(line_no, "empty file, expected header 'MILP v1'");
  if (!n) throw ParseError(line_no, "missing 'vars'");
  if (!lb) throw ParseError(line_no, "missing 'lb'");
  if (!ub) throw ParseError(line_no, "missing 'ub'");
  if (!ints) ints.emplace();
  if (!obj) obj = IntVector(*n, 0);

  ParsedInstance out;
  std::vector<bool> is_int(*n, false);
  for (std::size_t i : *ints) is_int[i] = true;
  for (std::size_t j = 0; j < *n; ++j) {
    if (is_int[j]) out.file_column.push_back(j);
  }
  for (std::size_t j = 0; j < *n; ++j) {
    if (!is_int[j]) out.file_column.push_back(j);
  }
  const std::size_t z = ints->size();
  MilpInstance& inst = out.instance;
  inst.a_int = RationalMatrix(rows.size(), z);
  inst.a_frac = RationalMatrix(rows.size(), *n - z);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    BigInt scale = rows[i].rhs.get_den();
    for (const Rational& v : rows[i].coeffs) scale = lcm(scale, BigInt(v.get_den()));
    for (std::size_t k = 0; k < *n; ++k) {
      const Rational v = rows[i].coeffs[out.file_column[k]] * scale;
      if (k < z) {
        inst.a_int(i, k) = v;
      } else {
        inst.a_frac(i, k - z) = v;
      }
    }
    inst.b.push_back(BigInt(Rational(rows[i].rhs * scale).get_num()));
  }
  for (std::size_t k = 0; k < *n; ++k) {
    inst.c.push_back((*obj)[out.file_column[k]]);
    inst.lower.push_back((*lb)[out.file_column[k]]);
    inst.upper.push_back((*ub)[out.file_column[k]]);
  }
  try {
    inst.validate();
  } catch (const ValidationError& e) {
    throw ParseError(line_no, e.what());
  }
  return out;
}

std::string serialize(const ParsedInstance& parsed) {
  const MilpInstance& inst = parsed.instance;
  const std::size_t n = inst.vars();
  const std::size_t z = inst.z();
  std::vector<std::size_t> slot(n);
  for (std::size_t k = 0; k < n; ++k) slot[parsed.file_column[k]] = k;
  const RationalMatrix a = inst.matrix();

  std::ostringstream out;
  out << "MILP v1\nvars " << n << "\nints";
  std::vector<std::size_t> ints(parsed.file_column.begin(), parsed.file_column.begin() + z);
  std::sort(ints.begin(), ints.end());
  for (std::size_t i : ints) out << ' ' << i;
  auto vec = [&](const char* key, const IntVector& v) {
    out << '\n' << key;
    for (std::size_t j = 0; j < n; ++j) out << ' ' << v[slot[j]];
  };
  vec("obj", inst.c);
  for (std::size_t i = 0; i < inst.rows(); ++i) {
    out << "\nrow";
    for (std::size_t j = 0; j < n; ++j) out << ' ' << to_string(a(i, slot[j]));
    out << " = " << inst.b[i];
  }
  vec("lb", inst.lower);
  vec("ub", inst.upper);
  out << '\n';
  return out.str();
}

std::string serialize(const MilpInstance& inst) {
  ParsedInstance p{inst, {}};
  for (std::size_t k = 0; k < inst.vars(); ++k) p.file_column.push_back(k);
  return serialize(p);
}

}  // namespace milptd
