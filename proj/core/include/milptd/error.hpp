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

#ifndef MILPTD_ERROR_HPP_
#define MILPTD_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace milptd {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes that do not fit together (non-square input, row length mismatch).
class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError() : Error("matrix is singular") {}
  explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

// A decomposition does not witness the graph it is checked against.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A configured size or magnitude limit was hit. log2_estimate is a lower
// bound on the base-2 logarithm of the quantity that overflowed, or a
// negative value when no magnitude is involved (e.g. an enumeration cap).
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, long double log2_estimate = -1)
      : Error(what), log2_estimate_(log2_estimate) {}

  long double log2_estimate() const { return log2_estimate_; }

 private:
  long double log2_estimate_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A point violates a constraint row or a bound.
class FeasibilityError : public Error {
 public:
  FeasibilityError(std::size_t row, const std::string& what)
      : Error(what), row_(row) {}

  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

// An internal consistency check failed. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace milptd

#endif  // MILPTD_ERROR_HPP_
