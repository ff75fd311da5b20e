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


#include "milptd/record.hpp"

#include <cmath>
#include <cstdio>

#include "milptd/error.hpp"

namespace milptd {

void Record::set(const std::string& key, std::string value) {
  if (key.find('=') != std::string::npos || value.find('\n') != std::string::npos) {
    throw ValidationError("record key or value breaks the line format: " + key);
  }
  entries_.emplace_back(key, std::move(value));
}

void Record::set_log2(const std::string& key, long double value) {
  if (std::isinf(value)) {
    set(key, "inf");
    return;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3Lf", value);
  set(key, buf);
}

std::string Record::machine() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + "=" + v + "\n";
  return out;
}

std::string Record::text() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + " = " + v + "\n";
  return out;
}

}  // namespace milptd
