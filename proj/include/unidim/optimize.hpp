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

/// Ordered pair of finite bounds, lo < hi.
struct Interval {
  double lo;
  double hi;

  Interval(double lo_, double hi_);

  double width() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
};

enum class Method { Brent, Golden };

struct SolveOptions {
  double x_tolerance = 1e-8;
  int max_iterations = 500;
  Method method = Method::Brent;
  /// Fractional standoff from each endpoint: the search is confined to
  /// [lo + m, hi - m] with m = endpoint_margin * (hi - lo). Keeps solvers
  /// off boundary poles (the pipe objective diverges at both endpoints).
  double endpoint_margin = 1e-9;
};

struct MinimizeResult {
  double x_min = 0.0;
  double f_min = 0.0;
  int iterations = 0;
  int function_evaluations = 0;
  bool converged = false;
  double final_bracket_width = 0.0;
};

/// fminbnd-style bounded minimization: a local (not certified-global)
/// minimizer inside iv, found by the method selected in opts.
///
/// Probes that fault compare as +inf inside the solver (the point loses),
/// but a result only reports converged at a non-faulting point. Throws
/// NoEvaluablePoint when every probe faults. Hitting max_iterations is not
/// an error: the best point so far is returned with converged = false.
MinimizeResult minimize_bounded(const ScalarFunction& f, const Interval& iv,
                                const SolveOptions& opts = {});

/// Maximization by negation: exactly minimize_bounded(-f) with the
/// reported value re-negated, so f_min holds the maximum of f and x_min is
/// bit-identical to the minimizer of -f.
MinimizeResult maximize_bounded(const ScalarFunction& f, const Interval& iv,
                                const SolveOptions& opts = {});

/// Reference golden-section search, ratio (sqrt(5)-1)/2. One evaluation
/// per iteration; the bracket contracts by exactly that ratio each full
/// iteration regardless of f. Terminates when
/// width <= 2 * x_tolerance * max(1, |best x|).
MinimizeResult golden_section(const ScalarFunction& f, const Interval& iv,
                              const SolveOptions& opts = {});

/// Brent's method: safeguarded successive parabolic interpolation through
/// the three best points, falling back to a golden-section step whenever
/// the parabolic candidate is rejected. Termination as golden_section.
MinimizeResult brent_min(const ScalarFunction& f, const Interval& iv,
                         const SolveOptions& opts = {});

/// Downhill bracket a < b < c with f(b) < f(a) and f(b) < f(c).
struct Bracket {
  double a;
  double b;
  double c;
};

/// Expand geometrically (factor 1.618) downhill from x0 until a bracket
/// forms. Throws BracketFailure after 100 expansions (monotone function on
/// the explored ray) and DomainFault if f faults at x0 or x0 + step.
Bracket bracket_minimum(const ScalarFunction& f, double x0, double step);

}  // namespace unidim
