// Copyright 2026 The unidim authors
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

#include "unidim/format.hpp"

#include <charconv>
#include <cstdio>

namespace unidim {

std::string shortest_decimal(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;  // 32 bytes always suffice for a double
  return std::string(buf, ptr);
}

std::string sig6(double value) {
  char buf[40];
  int n = std::snprintf(buf, sizeof(buf), "%.6g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

}  // namespace unidim
