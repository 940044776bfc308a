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

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "unidim/errors.hpp"

namespace unidim {

/// Node kinds of the expression tree. The language has one free variable
/// (`x`), real constants, and the operator set below.
enum class Op {
  Constant,
  Variable,
  // unary
  Neg,
  Sin,
  Cos,
  Tan,
  Csc,
  Sec,
  Cot,
  Asin,
  Acos,
  Atan,
  Sqrt,
  Exp,
  Ln,
  Abs,
  // binary
  Add,
  Sub,
  Mul,
  Div,
  Pow,
};

bool is_unary(Op op);
bool is_binary(Op op);
const char* op_name(Op op);

/// Immutable expression tree for a scalar function of one variable.
///
/// An Expr is a cheap value type: copies share structure. Trees are built
/// through the factory functions and operators below and never mutate, so
/// they are safe to share across threads.
class Expr {
 public:
  struct Node {
    Op op;
    double value = 0.0;  // Constant only
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
  };

  Expr() = default;  // empty handle; only valid as a target of assignment

  static Expr constant(double value);
  static Expr variable();

  bool valid() const { return node_ != nullptr; }
  Op op() const { return node_->op; }
  double value() const { return node_->value; }
  Expr left() const { return Expr(node_->a); }
  Expr right() const { return Expr(node_->b); }
  const std::shared_ptr<const Node>& node() const { return node_; }

  friend Expr make_unary(Op op, const Expr& child);
  friend Expr make_binary(Op op, const Expr& lhs, const Expr& rhs);

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Structural equality. Constants compare bit-for-bit.
bool operator==(const Expr& lhs, const Expr& rhs);
inline bool operator!=(const Expr& lhs, const Expr& rhs) { return !(lhs == rhs); }

// Tree builders. neg of a constant folds to a negated constant so that
// printed negative literals re-parse to an identical tree.
Expr make_unary(Op op, const Expr& child);
Expr make_binary(Op op, const Expr& lhs, const Expr& rhs);

Expr operator-(const Expr& e);
Expr operator+(const Expr& lhs, const Expr& rhs);
Expr operator-(const Expr& lhs, const Expr& rhs);
Expr operator*(const Expr& lhs, const Expr& rhs);
Expr operator/(const Expr& lhs, const Expr& rhs);
Expr pow(const Expr& base, const Expr& exponent);

Expr sin(const Expr& e);
Expr cos(const Expr& e);
Expr tan(const Expr& e);
Expr csc(const Expr& e);
Expr sec(const Expr& e);
Expr cot(const Expr& e);
Expr asin(const Expr& e);
Expr acos(const Expr& e);
Expr atan(const Expr& e);
Expr sqrt(const Expr& e);
Expr exp(const Expr& e);
Expr ln(const Expr& e);
Expr abs(const Expr& e);

/// Parse expression text.
///
/// Grammar (whitespace insignificant, identifiers lowercase):
///
///   expr    := term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := '-' factor | power
///   power   := atom ('^' factor)?          -- right-associative
///   atom    := NUMBER | 'x' | 'pi' | 'e' | FUNC '(' expr ')' | '(' expr ')'
///   FUNC    := sin|cos|tan|csc|sec|cot|asin|acos|atan|sqrt|exp|ln|abs
///
/// Throws ParseError (with byte offset) on malformed input or unknown
/// identifiers.
Expr parse(std::string_view text);

/// Evaluate at x. Throws DomainFault when any node produces a non-finite
/// value (pole, invalid argument, overflow); never returns a non-finite
/// value. csc, sec, cot evaluate as 1/sin, 1/cos, 1/tan.
double eval(const Expr& e, double x);

/// Evaluate at x; nullopt instead of a throw on domain fault.
std::optional<double> try_eval(const Expr& e, double x);

/// Symbolic derivative with respect to x. Standard product, quotient and
/// chain rules; csc' = -csc*cot, sec' = sec*tan, cot' = -csc^2.
Expr differentiate(const Expr& e);

/// Constant folding plus the local identities x+0, 0+x, x-0, x*1, 1*x,
/// x*0, 0*x and x^1. Pointwise equal to the input wherever the input is
/// defined; no algebraic rewriting beyond these rules.
Expr simplify(const Expr& e);

/// Render with minimal parentheses; parse(to_string(e)) reproduces an
/// identical tree. Constants print as shortest round-trip decimals.
std::string to_string(const Expr& e);

}  // namespace unidim
