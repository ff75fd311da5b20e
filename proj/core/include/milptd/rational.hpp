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

#ifndef MILPTD_RATIONAL_HPP_
#define MILPTD_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace milptd {

// Arbitrary-precision integers and canonical fractions. mpq_class keeps
// values in lowest terms with a positive denominator after every operation.
using BigInt = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<BigInt>;
using RationalVector = std::vector<Rational>;

// Parses "p", "-p" or "p/q" (q != 0). The result is canonical, so "2/4"
// reads as 1/2. Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

// num/den in lowest terms. mpq_class(num, den) skips this step.
Rational make_rational(const BigInt& num, const BigInt& den);

// Canonical text form: "p/q", with "/q" dropped when q == 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

bool is_integral(const Rational& value);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);
BigInt abs(const BigInt& value);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);

// log2 of |value| as a long double; -inf for zero.
long double log2_abs(const BigInt& value);

// Number of bits of |value| (0 for zero).
std::size_t bit_length(const BigInt& value);

}  // namespace milptd

#endif  // MILPTD_RATIONAL_HPP_
