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

#include "unidim/function.hpp"

#include <cmath>
#include <utility>

#include "unidim/format.hpp"

namespace unidim {

ScalarFunction::ScalarFunction(Expr e)
    : body_(std::make_shared<const Body>(
          Body{std::move(e), nullptr, nullptr, "expression"})) {}

ScalarFunction ScalarFunction::from_callable(std::string label, Callable fn) {
  return ScalarFunction(std::make_shared<const Body>(
      Body{std::nullopt, std::move(fn), nullptr, std::move(label)}));
}

ScalarFunction ScalarFunction::negated() const {
  return ScalarFunction(std::make_shared<const Body>(
      Body{std::nullopt, nullptr, body_, "-(" + body_->label + ")"}));
}

std::optional<double> ScalarFunction::try_eval(double x) const {
  const Body* body = body_.get();
  bool negate = false;
  while (body->negated_inner) {
    negate = !negate;
    body = body->negated_inner.get();
  }
  std::optional<double> v;
  if (body->expr) {
    v = unidim::try_eval(*body->expr, x);
  } else {
    v = body->fn(x);
    if (v && !std::isfinite(*v)) v = std::nullopt;
  }
  if (v && negate) v = -*v;
  return v;
}

double ScalarFunction::operator()(double x) const {
  const Body* body = body_.get();
  bool negate = false;
  while (body->negated_inner) {
    negate = !negate;
    body = body->negated_inner.get();
  }
  double v;
  if (body->expr) {
    v = eval(*body->expr, x);  // carries the detailed fault message
  } else {
    std::optional<double> r = body->fn(x);
    if (!r || !std::isfinite(*r)) {
      throw DomainFault("domain fault in " + body->label +
                        " at x = " + shortest_decimal(x));
    }
    v = *r;
  }
  return negate ? -v : v;
}

std::optional<Expr> ScalarFunction::symbolic() const {
  const Body* body = body_.get();
  bool negate = false;
  while (body->negated_inner) {
    negate = !negate;
    body = body->negated_inner.get();
  }
  if (!body->expr) return std::nullopt;
  return negate ? -*body->expr : *body->expr;
}

const std::string& ScalarFunction::label() const { return body_->label; }

}  // namespace unidim
