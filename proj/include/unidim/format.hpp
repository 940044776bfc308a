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

#pragma once

#include <string>

namespace unidim {

/// Shortest decimal string that round-trips to exactly the same double.
std::string shortest_decimal(double value);

/// Human-oriented rendering with 6 significant digits (text output mode).
std::string sig6(double value);

}  // namespace unidim
