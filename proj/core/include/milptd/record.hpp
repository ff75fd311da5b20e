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


#ifndef MILPTD_RECORD_HPP_
#define MILPTD_RECORD_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "milptd/rational.hpp"

namespace milptd {

// Ordered key/value report. Machine form is one `key=value` per line, so
// golden outputs diff cleanly.
class Record {
 public:
  void set(const std::string& key, std::string value);
  void set(const std::string& key, const char* value) { set(key, std::string(value)); }
  void set(const std::string& key, const BigInt& value) { set(key, value.get_str()); }
  void set(const std::string& key, const Rational& value) { set(key, value.get_str()); }
  void set(const std::string& key, std::size_t value) { set(key, std::to_string(value)); }
  void set(const std::string& key, bool value) { set(key, value ? "true" : "false"); }
  // Three decimals; "inf" when infinite.
  void set_log2(const std::string& key, long double value);

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string machine() const;
  // `key = value` per line.
  std::string text() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace milptd

#endif  // MILPTD_RECORD_HPP_
