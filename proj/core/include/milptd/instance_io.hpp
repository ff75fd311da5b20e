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


#ifndef MILPTD_INSTANCE_IO_HPP_
#define MILPTD_INSTANCE_IO_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "milptd/milp.hpp"

namespace milptd {

// A parsed instance file. The solver wants integer columns first, so the
// columns are reordered; file_column[k] is the file index of column k.
struct ParsedInstance {
  MilpInstance instance;
  std::vector<std::size_t> file_column;

  // Maps a solution in solver order back to file order.
  RationalVector to_file_order(std::span<const Rational> x) const;
};

// Text format, one directive per line, '#' starts a comment:
//   MILP v1
//   vars n
//   ints i1 i2 ...
//   obj c1 ... cn
//   row a1 ... an = b      (repeated)
//   lb l1 ... ln
//   ub u1 ... un
// A row with rational entries is scaled by the lcm of its denominators.
// obj, lb and ub must be integral.
ParsedInstance parse_instance(std::string_view text);

// Canonical text in file column order.
std::string serialize(const ParsedInstance& parsed);
// Identity column order: integer variables are 0..z-1.
std::string serialize(const MilpInstance& inst);

}  // namespace milptd

#endif  // MILPTD_INSTANCE_IO_HPP_
