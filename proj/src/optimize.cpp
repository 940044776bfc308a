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

#include "unidim/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace unidim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Faulting probes lose every comparison but may not be reported as the
// minimizer; `finite_seen` distinguishes "all faults" from a real result.
// The best finite probe is tracked so a result never lands on a fault.
struct Prober {
  const ScalarFunction& f;
  int evaluations = 0;
  bool finite_seen = false;
  double best_x = 0.0;
  double best_f = kInf;

  double operator()(double x) {
    ++evaluations;
    std::optional<double> v = f.try_eval(x);
    if (!v) return kInf;
    finite_seen = true;
    if (*v < best_f) {
      best_f = *v;
      best_x = x;
    }
    return *v;
  }
};

void check_options(const SolveOptions& opts) {
  if (!(opts.x_tolerance > 0.0)) {
    throw std::invalid_argument("x_tolerance must be positive");
  }
  if (opts.max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
  if (!(opts.endpoint_margin >= 0.0) || opts.endpoint_margin >= 0.5) {
    throw std::invalid_argument("endpoint_margin must be in [0, 0.5)");
  }
}

Interval shrink_by_margin(const Interval& iv, double margin) {
  double m = margin * iv.width();
  return m > 0.0 ? Interval(iv.lo + m, iv.hi - m) : iv;
}

double stop_width(double tol, double x) {
  return 2.0 * tol * std::max(1.0, std::abs(x));
}

}  // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw std::invalid_argument("interval requires finite lo < hi");
  }
}

MinimizeResult golden_section(const ScalarFunction& f, const Interval& iv,
                              const SolveOptions& opts) {
  check_options(opts);
  const Interval search = shrink_by_margin(iv, opts.endpoint_margin);
  const double rho = 0.5 * (std::sqrt(5.0) - 1.0);

  Prober probe{f};
  double a = search.lo;
  double b = search.hi;
  double x1 = b - rho * (b - a);
  double x2 = a + rho * (b - a);
  double f1 = probe(x1);
  double f2 = probe(x2);

  MinimizeResult result;
  for (;;) {
    double best_x = (f1 <= f2) ? x1 : x2;  // ties keep the left point
    if (b - a <= stop_width(opts.x_tolerance, best_x)) {
      result.converged = true;
      break;
    }
    if (result.iterations >= opts.max_iterations) break;
    ++result.iterations;
    if (f2 < f1) {
      // strict: on a tie the older point stays the center
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + rho * (b - a);
      f2 = probe(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - rho * (b - a);
      f1 = probe(x1);
    }
  }

  if (!probe.finite_seen) {
    throw NoEvaluablePoint("no evaluable point in [" +
                           std::to_string(search.lo) + ", " +
                           std::to_string(search.hi) + "]");
  }
  bool left_best = (f1 <= f2);
  result.x_min = left_best ? x1 : x2;
  result.f_min = left_best ? f1 : f2;
  if (!std::isfinite(result.f_min)) {
    result.x_min = probe.best_x;
    result.f_min = probe.best_f;
    result.converged = false;
  }
  result.function_evaluations = probe.evaluations;
  result.final_bracket_width = b - a;
  return result;
}

MinimizeResult brent_min(const ScalarFunction& f, const Interval& iv,
                         const SolveOptions& opts) {
  check_options(opts);
  const Interval search = shrink_by_margin(iv, opts.endpoint_margin);
  const double c = 0.5 * (3.0 - std::sqrt(5.0));  // 1 - golden ratio

  Prober probe{f};
  double a = search.lo;
  double b = search.hi;
  double x = a + c * (b - a);
  double w = x, v = x;
  double fx = probe(x);
  double fw = fx, fv = fx;
  double d = 0.0, e = 0.0;  // current and previous-previous step sizes

  MinimizeResult result;
  for (;;) {
    const double m = 0.5 * (a + b);
    const double t = opts.x_tolerance * std::max(1.0, std::abs(x));
    // Probes may come within t/2 of x and of the ends, so the bracket can
    // actually reach the <= 2t stopping width.
    const double step = 0.5 * t;
    if (b - a <= 2.0 * t) {
      result.converged = true;
      break;
    }
    if (result.iterations >= opts.max_iterations) break;
    ++result.iterations;

    double p = 0.0, q = 0.0, r = 0.0;
    bool parabolic = false;
    if (std::abs(e) > step) {
      // Fit a parabola through (x, fx), (w, fw), (v, fv).
      r = (x - w) * (fx - fv);
      q = (x - v) * (fx - fw);
      p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      double e_prev = e;
      e = d;
      // Accept when inside the bracket and less than half the step
      // before last.
      if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) &&
          p < q * (b - x)) {
        parabolic = true;
        d = p / q;
        double u = x + d;
        // do not evaluate too close to the bracket ends
        if (u - a < step || b - u < step) {
          d = (x < m) ? step : -step;
        }
      }
    }
    if (!parabolic) {
      e = ((x < m) ? b : a) - x;
      d = c * e;
    }

    // never evaluate closer than step to the current best
    double u = x + ((std::abs(d) >= step) ? d : (d > 0.0 ? step : -step));
    double fu = probe(u);

    if (fu < fx) {  // strict: ties keep the older best point
      if (u < x) {
        b = x;
      } else {
        a = x;
      }
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) {
        a = u;
      } else {
        b = u;
      }
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }

  if (!probe.finite_seen) {
    throw NoEvaluablePoint("no evaluable point in [" +
                           std::to_string(search.lo) + ", " +
                           std::to_string(search.hi) + "]");
  }
  result.x_min = x;
  result.f_min = fx;
  if (!std::isfinite(result.f_min)) {
    result.x_min = probe.best_x;
    result.f_min = probe.best_f;
    result.converged = false;
  }
  result.function_evaluations = probe.evaluations;
  result.final_bracket_width = b - a;
  return result;
}

MinimizeResult minimize_bounded(const ScalarFunction& f, const Interval& iv,
                                const SolveOptions& opts) {
  return opts.method == Method::Golden ? golden_section(f, iv, opts)
                                       : brent_min(f, iv, opts);
}

MinimizeResult maximize_bounded(const ScalarFunction& f, const Interval& iv,
                                const SolveOptions& opts) {
  MinimizeResult result = minimize_bounded(f.negated(), iv, opts);
  result.f_min = -result.f_min;
  return result;
}

Bracket bracket_minimum(const ScalarFunction& f, double x0, double step) {
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(x0)) {
    throw std::invalid_argument("finite x0 and positive step required");
  }
  const double gold = 1.618;

  double a = x0;
  double fa = f(a);  // throws DomainFault per the precondition
  double b = x0 + step;
  double fb = f(b);
  if (fb > fa) {
    std::swap(a, b);
    std::swap(fa, fb);
  }

  auto probe = [&f](double x) {
    std::optional<double> v = f.try_eval(x);
    return v ? *v : kInf;
  };

  double c = b + gold * (b - a);
  double fc = probe(c);
  int expansions = 0;
  while (fc < fb) {
    if (++expansions > 100) {
      throw BracketFailure("no bracket after 100 expansions from x0 = " +
                           std::to_string(x0));
    }
    a = b;
    fa = fb;
    b = c;
    fb = fc;
    c = b + gold * (b - a);
    fc = probe(c);
  }
  if (!(fb < fa) || !(fb < fc)) {
    throw BracketFailure("function is flat or monotone near x0 = " +
                         std::to_string(x0));
  }
  if (a > c) std::swap(a, c);
  return Bracket{a, b, c};
}

}  // namespace unidim
