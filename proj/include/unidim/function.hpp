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

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "unidim/expr.hpp"

namespace unidim {

/// An evaluatable real -> real function: a parsed expression, a built-in
/// model curve, or the negation of another ScalarFunction.
///
/// Evaluation either produces a finite value or signals a domain fault;
/// non-finite results are faults, never values. Immutable and cheap to
/// copy; safe for concurrent use.
class ScalarFunction {
 public:
  using Callable = std::function<std::optional<double>(double)>;

  /// Wrap a parsed expression.
  explicit ScalarFunction(Expr e);

  /// Wrap a built-in curve. The callable reports faults as nullopt; a
  /// non-finite value is also treated as a fault.
  static ScalarFunction from_callable(std::string label, Callable fn);

  /// exactly -f: try_eval(negated(), x) == -try_eval(x) bit for bit.
  ScalarFunction negated() const;

  /// Finite value, or nullopt on a domain fault.
  std::optional<double> try_eval(double x) const;

  /// Finite value, or throws DomainFault.
  double operator()(double x) const;

  /// The expression form, when this function (or the function it negates)
  /// is expression-backed. Built-in curves return nullopt.
  std::optional<Expr> symbolic() const;

  const std::string& label() const;

 private:
  struct Body {
    std::optional<Expr> expr;
    Callable fn;
    std::shared_ptr<const Body> negated_inner;
    std::string label;
  };

  explicit ScalarFunction(std::shared_ptr<const Body> body)
      : body_(std::move(body)) {}

  std::shared_ptr<const Body> body_;
};

}  // namespace unidim
