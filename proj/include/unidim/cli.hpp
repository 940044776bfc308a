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

#include <iosfwd>
#include <string>
#include <vector>

namespace unidim::cli {

/// Run the command line given as argv (program name excluded) and write
/// emissions to out/err.
///
/// Exit codes: 0 success, 1 usage or expression parse error, 2 solver
/// failure (including a result that did not converge). Output is
/// deterministic: identical argv produces byte-identical emissions unless
/// --timing is given.
int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);

}  // namespace unidim::cli
