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

#include "unidim/expr.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "unidim/format.hpp"

namespace unidim {

bool is_unary(Op op) { return op >= Op::Neg && op <= Op::Abs; }
bool is_binary(Op op) { return op >= Op::Add && op <= Op::Pow; }

const char* op_name(Op op) {
  switch (op) {
    case Op::Constant: return "constant";
    case Op::Variable: return "x";
    case Op::Neg: return "neg";
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    case Op::Tan: return "tan";
    case Op::Csc: return "csc";
    case Op::Sec: return "sec";
    case Op::Cot: return "cot";
    case Op::Asin: return "asin";
    case Op::Acos: return "acos";
    case Op::Atan: return "atan";
    case Op::Sqrt: return "sqrt";
    case Op::Exp: return "exp";
    case Op::Ln: return "ln";
    case Op::Abs: return "abs";
    case Op::Add: return "add";
    case Op::Sub: return "sub";
    case Op::Mul: return "mul";
    case Op::Div: return "div";
    case Op::Pow: return "pow";
  }
  return "?";
}

Expr Expr::constant(double value) {
  return Expr(std::make_shared<const Node>(Node{Op::Constant, value, nullptr, nullptr}));
}

Expr Expr::variable() {
  return Expr(std::make_shared<const Node>(Node{Op::Variable, 0.0, nullptr, nullptr}));
}

Expr make_unary(Op op, const Expr& child) {
  // -c folds to the negated constant; see the round-trip note in expr.hpp.
  if (op == Op::Neg && child.op() == Op::Constant) {
    return Expr::constant(-child.value());
  }
  return Expr(std::make_shared<const Expr::Node>(
      Expr::Node{op, 0.0, child.node(), nullptr}));
}

Expr make_binary(Op op, const Expr& lhs, const Expr& rhs) {
  return Expr(std::make_shared<const Expr::Node>(
      Expr::Node{op, 0.0, lhs.node(), rhs.node()}));
}

Expr operator-(const Expr& e) { return make_unary(Op::Neg, e); }
Expr operator+(const Expr& l, const Expr& r) { return make_binary(Op::Add, l, r); }
Expr operator-(const Expr& l, const Expr& r) { return make_binary(Op::Sub, l, r); }
Expr operator*(const Expr& l, const Expr& r) { return make_binary(Op::Mul, l, r); }
Expr operator/(const Expr& l, const Expr& r) { return make_binary(Op::Div, l, r); }
Expr pow(const Expr& b, const Expr& e) { return make_binary(Op::Pow, b, e); }

Expr sin(const Expr& e) { return make_unary(Op::Sin, e); }
Expr cos(const Expr& e) { return make_unary(Op::Cos, e); }
Expr tan(const Expr& e) { return make_unary(Op::Tan, e); }
Expr csc(const Expr& e) { return make_unary(Op::Csc, e); }
Expr sec(const Expr& e) { return make_unary(Op::Sec, e); }
Expr cot(const Expr& e) { return make_unary(Op::Cot, e); }
Expr asin(const Expr& e) { return make_unary(Op::Asin, e); }
Expr acos(const Expr& e) { return make_unary(Op::Acos, e); }
Expr atan(const Expr& e) { return make_unary(Op::Atan, e); }
Expr sqrt(const Expr& e) { return make_unary(Op::Sqrt, e); }
Expr exp(const Expr& e) { return make_unary(Op::Exp, e); }
Expr ln(const Expr& e) { return make_unary(Op::Ln, e); }
Expr abs(const Expr& e) { return make_unary(Op::Abs, e); }

namespace {

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool nodes_equal(const Expr::Node* a, const Expr::Node* b) {
  if (a == b) return true;
  if (a == nullptr || b == nullptr) return false;
  if (a->op != b->op) return false;
  if (a->op == Op::Constant) return same_bits(a->value, b->value);
  return nodes_equal(a->a.get(), b->a.get()) && nodes_equal(a->b.get(), b->b.get());
}

}  // namespace

bool operator==(const Expr& lhs, const Expr& rhs) {
  return nodes_equal(lhs.node().get(), rhs.node().get());
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

double apply_unary(Op op, double c) {
  switch (op) {
    case Op::Neg: return -c;
    case Op::Sin: return std::sin(c);
    case Op::Cos: return std::cos(c);
    case Op::Tan: return std::tan(c);
    case Op::Csc: return 1.0 / std::sin(c);
    case Op::Sec: return 1.0 / std::cos(c);
    case Op::Cot: return 1.0 / std::tan(c);
    case Op::Asin: return std::asin(c);
    case Op::Acos: return std::acos(c);
    case Op::Atan: return std::atan(c);
    case Op::Sqrt: return std::sqrt(c);
    case Op::Exp: return std::exp(c);
    case Op::Ln: return std::log(c);
    case Op::Abs: return std::abs(c);
    default: return std::numeric_limits<double>::quiet_NaN();
  }
}

double apply_binary(Op op, double l, double r) {
  switch (op) {
    case Op::Add: return l + r;
    case Op::Sub: return l - r;
    case Op::Mul: return l * r;
    case Op::Div: return l / r;
    case Op::Pow: return std::pow(l, r);
    default: return std::numeric_limits<double>::quiet_NaN();
  }
}

// Recursive evaluation with a per-node finiteness check. On the first
// fault `fault` is set to the offending node and NaN propagates up.
double eval_node(const Expr::Node* n, double x, const Expr::Node** fault) {
  double v;
  switch (n->op) {
    case Op::Constant:
      v = n->value;
      break;
    case Op::Variable:
      v = x;
      break;
    default:
      if (is_unary(n->op)) {
        double c = eval_node(n->a.get(), x, fault);
        if (*fault != nullptr) return c;
        v = apply_unary(n->op, c);
      } else {
        double l = eval_node(n->a.get(), x, fault);
        if (*fault != nullptr) return l;
        double r = eval_node(n->b.get(), x, fault);
        if (*fault != nullptr) return r;
        v = apply_binary(n->op, l, r);
      }
      break;
  }
  if (!std::isfinite(v)) {
    *fault = n;
    return std::numeric_limits<double>::quiet_NaN();
  }
  return v;
}

}  // namespace

std::optional<double> try_eval(const Expr& e, double x) {
  const Expr::Node* fault = nullptr;
  double v = eval_node(e.node().get(), x, &fault);
  if (fault != nullptr) return std::nullopt;
  return v;
}

double eval(const Expr& e, double x) {
  const Expr::Node* fault = nullptr;
  double v = eval_node(e.node().get(), x, &fault);
  if (fault != nullptr) {
    throw DomainFault(std::string("domain fault in '") + op_name(fault->op) +
                      "' at x = " + shortest_decimal(x));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Differentiation
// ---------------------------------------------------------------------------

namespace {

// factor * du, dropping the trailing *1 of the common d/dx x chain step.
Expr mul_chain(const Expr& factor, const Expr& du) {
  if (du.op() == Op::Constant && du.value() == 1.0) return factor;
  return factor * du;
}

}  // namespace

Expr differentiate(const Expr& e) {
  const Expr one = Expr::constant(1.0);
  const Expr two = Expr::constant(2.0);
  switch (e.op()) {
    case Op::Constant:
      return Expr::constant(0.0);
    case Op::Variable:
      return one;
    case Op::Neg:
      return -differentiate(e.left());
    case Op::Sin:
      return mul_chain(cos(e.left()), differentiate(e.left()));
    case Op::Cos:
      return mul_chain(-sin(e.left()), differentiate(e.left()));
    case Op::Tan:
      return mul_chain(pow(sec(e.left()), two), differentiate(e.left()));
    case Op::Csc:
      return mul_chain(-(csc(e.left()) * cot(e.left())), differentiate(e.left()));
    case Op::Sec:
      return mul_chain(sec(e.left()) * tan(e.left()), differentiate(e.left()));
    case Op::Cot:
      return mul_chain(-pow(csc(e.left()), two), differentiate(e.left()));
    case Op::Asin:
      return differentiate(e.left()) / sqrt(one - pow(e.left(), two));
    case Op::Acos:
      return -(differentiate(e.left()) / sqrt(one - pow(e.left(), two)));
    case Op::Atan:
      return differentiate(e.left()) / (one + pow(e.left(), two));
    case Op::Sqrt:
      return differentiate(e.left()) / (two * sqrt(e.left()));
    case Op::Exp:
      return mul_chain(exp(e.left()), differentiate(e.left()));
    case Op::Ln:
      return differentiate(e.left()) / e.left();
    case Op::Abs:
      // u/|u| * u'; undefined at u = 0, as abs itself is.
      return mul_chain(e.left() / abs(e.left()), differentiate(e.left()));
    case Op::Add:
      return differentiate(e.left()) + differentiate(e.right());
    case Op::Sub:
      return differentiate(e.left()) - differentiate(e.right());
    case Op::Mul:
      return differentiate(e.left()) * e.right() + e.left() * differentiate(e.right());
    case Op::Div:
      return (differentiate(e.left()) * e.right() -
              e.left() * differentiate(e.right())) /
             pow(e.right(), two);
    case Op::Pow: {
      const Expr& u = e.left();
      const Expr& v = e.right();
      if (v.op() == Op::Constant) {
        // c*u^(c-1)*u'
        return mul_chain(Expr::constant(v.value()) *
                             pow(u, Expr::constant(v.value() - 1.0)),
                         differentiate(u));
      }
      // u^v * (v'*ln(u) + v*u'/u)
      return e * (differentiate(v) * ln(u) + v * differentiate(u) / u);
    }
  }
  return Expr::constant(0.0);  // unreachable
}

// ---------------------------------------------------------------------------
// Simplification
// ---------------------------------------------------------------------------

namespace {

bool is_const(const Expr& e, double v) {
  return e.op() == Op::Constant && e.value() == v;
}

}  // namespace

Expr simplify(const Expr& e) {
  if (e.op() == Op::Constant || e.op() == Op::Variable) return e;

  if (is_unary(e.op())) {
    Expr c = simplify(e.left());
    if (c.op() == Op::Constant) {
      double v = apply_unary(e.op(), c.value());
      if (std::isfinite(v)) return Expr::constant(v);
    }
    if (c.node() == e.left().node()) return e;
    return make_unary(e.op(), c);
  }

  Expr l = simplify(e.left());
  Expr r = simplify(e.right());
  if (l.op() == Op::Constant && r.op() == Op::Constant) {
    double v = apply_binary(e.op(), l.value(), r.value());
    if (std::isfinite(v)) return Expr::constant(v);
  }
  switch (e.op()) {
    case Op::Add:
      if (is_const(l, 0.0)) return r;
      if (is_const(r, 0.0)) return l;
      break;
    case Op::Sub:
      if (is_const(r, 0.0)) return l;
      break;
    case Op::Mul:
      if (is_const(l, 1.0)) return r;
      if (is_const(r, 1.0)) return l;
      if (is_const(l, 0.0) || is_const(r, 0.0)) return Expr::constant(0.0);
      break;
    case Op::Pow:
      if (is_const(r, 1.0)) return l;
      break;
    default:
      break;
  }
  if (l.node() == e.left().node() && r.node() == e.right().node()) return e;
  return make_binary(e.op(), l, r);
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct FuncEntry {
  const char* name;
  Op op;
};

constexpr FuncEntry kFunctions[] = {
    {"sin", Op::Sin},   {"cos", Op::Cos},   {"tan", Op::Tan},
    {"csc", Op::Csc},   {"sec", Op::Sec},   {"cot", Op::Cot},
    {"asin", Op::Asin}, {"acos", Op::Acos}, {"atan", Op::Atan},
    {"sqrt", Op::Sqrt}, {"exp", Op::Exp},   {"ln", Op::Ln},
    {"abs", Op::Abs},
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr run() {
    Expr e = parse_expr(0);
    skip_ws();
    if (pos_ != text_.size()) {
      fail("expected operator or end of input");
    }
    return e;
  }

 private:
  // recursion cap; far beyond any sane expression, well short of the stack
  static constexpr int kMaxDepth = 256;

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError("syntax error: " + expected, pos_);
  }

  void check_depth(int depth) {
    if (depth > kMaxDepth) fail("expression nests too deeply");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_expr(int depth) {
    check_depth(depth);
    Expr e = parse_term(depth);
    for (;;) {
      if (consume('+')) {
        e = e + parse_term(depth);
      } else if (consume('-')) {
        e = e - parse_term(depth);
      } else {
        return e;
      }
    }
  }

  Expr parse_term(int depth) {
    Expr e = parse_factor(depth);
    for (;;) {
      if (consume('*')) {
        e = e * parse_factor(depth);
      } else if (consume('/')) {
        e = e / parse_factor(depth);
      } else {
        return e;
      }
    }
  }

  Expr parse_factor(int depth) {
    check_depth(depth);
    if (consume('-')) {
      return -parse_factor(depth + 1);
    }
    return parse_power(depth);
  }

  Expr parse_power(int depth) {
    Expr base = parse_atom(depth);
    if (consume('^')) {
      return pow(base, parse_factor(depth + 1));  // right-associative exponent
    }
    return base;
  }

  Expr parse_atom(int depth) {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Expr e = parse_expr(depth + 1);
      if (!consume(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return parse_number();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return parse_identifier(depth);
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  Expr parse_number() {
    double value = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return Expr::constant(value);
  }

  Expr parse_identifier(int depth) {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") return Expr::variable();
    if (name == "pi") return Expr::constant(std::numbers::pi);
    if (name == "e") return Expr::constant(std::numbers::e);
    for (const FuncEntry& f : kFunctions) {
      if (name == f.name) {
        if (!consume('(')) {
          fail(std::string("expected '(' after function '") + f.name + "'");
        }
        Expr arg = parse_expr(depth + 1);
        if (!consume(')')) fail("expected ')'");
        return make_unary(f.op, arg);
      }
    }
    throw ParseError("unknown identifier '" + std::string(name) + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

// Precedence levels for parenthesization. A child prints without parens
// when its level is >= the level required by its position.
//   1 add/sub   2 mul/div   3 unary minus   4 pow   5 atom
int print_level(const Expr::Node* n) {
  switch (n->op) {
    case Op::Add:
    case Op::Sub:
      return 1;
    case Op::Mul:
    case Op::Div:
      return 2;
    case Op::Neg:
      return 3;
    case Op::Constant:
      return n->value < 0.0 || std::signbit(n->value) ? 3 : 5;
    case Op::Pow:
      return 4;
    default:
      return 5;  // variable, function call
  }
}

void print_node(const Expr::Node* n, int need, std::string& out) {
  int level = print_level(n);
  bool parens = level < need;
  if (parens) out += '(';
  switch (n->op) {
    case Op::Constant:
      out += shortest_decimal(n->value);
      break;
    case Op::Variable:
      out += 'x';
      break;
    case Op::Neg:
      out += '-';
      print_node(n->a.get(), 3, out);
      break;
    case Op::Add:
      print_node(n->a.get(), 1, out);
      out += '+';
      print_node(n->b.get(), 2, out);
      break;
    case Op::Sub:
      print_node(n->a.get(), 1, out);
      out += '-';
      print_node(n->b.get(), 2, out);
      break;
    case Op::Mul:
      print_node(n->a.get(), 2, out);
      out += '*';
      print_node(n->b.get(), 3, out);
      break;
    case Op::Div:
      print_node(n->a.get(), 2, out);
      out += '/';
      print_node(n->b.get(), 3, out);
      break;
    case Op::Pow:
      print_node(n->a.get(), 5, out);  // base must be an atom
      out += '^';
      print_node(n->b.get(), 3, out);  // exponent is a factor
      break;
    default:
      out += op_name(n->op);
      out += '(';
      print_node(n->a.get(), 1, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print_node(e.node().get(), 1, out);
  return out;
}

}  // namespace unidim
