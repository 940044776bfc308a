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

#include "unidim/function.hpp"

namespace unidim {

/// Central finite-difference steps. Defaults balance truncation against
/// rounding: ~eps^(1/3) scale for the first derivative, ~eps^(1/4) scale
/// for the second.
struct DiffConfig {
  double first_order_step = 1e-5;
  double second_order_step = 1e-4;
};

/// (f(x+h) - f(x-h)) / (2h). Throws DomainFault if either probe faults.
double central_diff(const ScalarFunction& f, double x, const DiffConfig& cfg = {});

/// (f(x+h) - 2 f(x) + f(x-h)) / h^2. Throws DomainFault if any probe faults.
double second_diff(const ScalarFunction& f, double x, const DiffConfig& cfg = {});

}  // namespace unidim
