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

#include "unidim/numdiff.hpp"

#include <cmath>
#include <stdexcept>

namespace unidim {

namespace {

void check_step(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("finite positive step required");
  }
}

}  // namespace

double central_diff(const ScalarFunction& f, double x, const DiffConfig& cfg) {
  check_step(cfg.first_order_step);
  double h = cfg.first_order_step;
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double second_diff(const ScalarFunction& f, double x, const DiffConfig& cfg) {
  check_step(cfg.second_order_step);
  double h = cfg.second_order_step;
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace unidim
