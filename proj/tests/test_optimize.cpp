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
#include <memory>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "test_support.hpp"
#include "unidim/expr.hpp"
#include "unidim/models.hpp"

using namespace unidim;
using testing::rel_close;

namespace {

// Closed forms, independent of any solver in this library.
const double kPipeAlphaStar = std::atan(std::cbrt(0.5));     // 0.6708879787125153
const double kPipeLengthStar =
    std::pow(std::cbrt(3.0) * std::cbrt(3.0) + std::cbrt(6.0) * std::cbrt(6.0),
             1.5);                                           // 12.485814554824389
const double kCinemaXStar = std::sqrt(30.0);                 // 5.477225575051661
const double kCinemaThetaStar =
    std::atan(std::sqrt(10.0 / 3.0)) - std::atan(std::sqrt(0.3));

// Brute-force grid scan: the independent oracle for solver answers.
double grid_argmin(const ScalarFunction& f, double lo, double hi,
                   double resolution) {
  double best_x = lo, best_f = std::numeric_limits<double>::infinity();
  long n = std::lround((hi - lo) / resolution);
  for (long i = 0; i <= n; ++i) {
    double x = lo + i * resolution;
    auto v = f.try_eval(x);
    if (v && *v < best_f) {
      best_f = *v;
      best_x = x;
    }
  }
  return best_x;
}

struct CorpusEntry {
  const char* text;
  double lo;
  double hi;
};

// Smooth strictly-unimodal functions over their intervals.
const std::vector<CorpusEntry>& smooth_corpus() {
  static const std::vector<CorpusEntry> corpus = {
      {"(x-2)^2", 0.0, 5.0},
      {"x^2+2*x+3", -4.0, 4.0},
      {"cos(x)", 0.0, 6.0},
      {"exp(x)+exp(-x)", -2.0, 2.0},
      {"3/sin(x)+6/cos(x)", 0.01, 1.56},
      {"x^4+x", -2.0, 2.0},
      {"x^2+1/x", 0.1, 5.0},
      {"-sin(x)", 0.2, 3.0},
      {"ln(x)+1/x", 0.2, 9.0},
  };
  return corpus;
}

}  // namespace

TEST_CASE("frozen closed forms match their decimal renderings") {
  CHECK(kPipeAlphaStar == doctest::Approx(0.6708879787125153).epsilon(1e-15));
  CHECK(kPipeLengthStar == doctest::Approx(12.485814554824389).epsilon(1e-15));
  CHECK(kCinemaXStar == doctest::Approx(5.477225575051661).epsilon(1e-15));
  CHECK(kCinemaThetaStar == doctest::Approx(0.5686103002641824).epsilon(1e-15));
}

TEST_CASE("minimize_bounded: shifted parabola") {
  ScalarFunction f{parse("(x-2)^2")};
  MinimizeResult r = minimize_bounded(f, Interval(0.0, 5.0));
  CHECK(r.converged);
  CHECK(std::abs(r.x_min - 2.0) <= 1e-7);
  CHECK(r.f_min <= 1e-13);
  CHECK(r.f_min >= 0.0);
}

TEST_CASE("minimize_bounded: pipe objective on (0, pi/2)") {
  ScalarFunction f{parse("3/sin(x)+6/cos(x)")};
  MinimizeResult r = minimize_bounded(f, Interval(0.0, std::numbers::pi / 2));
  CHECK(r.converged);
  CHECK(std::abs(r.x_min - kPipeAlphaStar) <= 1e-6);
  CHECK(rel_close(r.f_min, kPipeLengthStar, 1e-9));

  // brute-force oracle at 1e-6 resolution
  double oracle = grid_argmin(f, 0.01, 1.56, 1e-6);
  CHECK(std::abs(r.x_min - oracle) <= 2e-6);
}

TEST_CASE("minimize_bounded: cosine interior minimum") {
  ScalarFunction f{parse("cos(x)")};
  MinimizeResult r = minimize_bounded(f, Interval(0.0, 2 * std::numbers::pi));
  CHECK(std::abs(r.x_min - std::numbers::pi) <= 1e-6);
  CHECK(std::abs(r.f_min - (-1.0)) <= 1e-10);
}

TEST_CASE("maximize_bounded: negated parabola and sine") {
  ScalarFunction f{parse("-(x-1)^2")};
  MinimizeResult r = maximize_bounded(f, Interval(-3.0, 3.0));
  CHECK(std::abs(r.x_min - 1.0) <= 1e-7);
  CHECK(std::abs(r.f_min) <= 1e-13);

  ScalarFunction s{parse("sin(x)")};
  MinimizeResult rs = maximize_bounded(s, Interval(0.0, std::numbers::pi));
  CHECK(std::abs(rs.x_min - std::numbers::pi / 2) <= 1e-6);
  CHECK(rs.f_min == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("maximize_bounded: cinema viewing angle") {
  ScalarFunction theta = cinema_curve(CinemaModel{10.0, 3.0});
  MinimizeResult r = maximize_bounded(theta, Interval(0.1, 100.0));
  CHECK(r.converged);
  CHECK(std::abs(r.x_min - kCinemaXStar) <= 1e-5);
  CHECK(std::abs(r.f_min - kCinemaThetaStar) <= 1e-6);

  ScalarFunction neg = theta.negated();
  double oracle = grid_argmin(neg, 4.0, 7.0, 1e-6);
  CHECK(std::abs(r.x_min - oracle) <= 2e-6);
}

TEST_CASE("negation duality is exact to the last bit") {
  SolveOptions opts;
  for (const CorpusEntry& entry : smooth_corpus()) {
    ScalarFunction f{parse(entry.text)};
    Interval iv(entry.lo, entry.hi);
    MinimizeResult mx = maximize_bounded(f, iv, opts);
    MinimizeResult mn = minimize_bounded(f.negated(), iv, opts);
    CHECK(mx.x_min == mn.x_min);
    CHECK(mx.f_min == -mn.f_min);
    CHECK(mx.function_evaluations == mn.function_evaluations);
  }
}

TEST_CASE("golden_section: geometric contraction independent of f") {
  const double rho = 0.5 * (std::sqrt(5.0) - 1.0);
  SolveOptions opts;
  opts.method = Method::Golden;
  opts.x_tolerance = 1e-300;  // never stop on tolerance
  opts.max_iterations = 50;
  opts.endpoint_margin = 0.0;

  ScalarFunction f{parse("(x-2)^2")};
  MinimizeResult r = golden_section(f, Interval(0.0, 5.0), opts);
  CHECK(!r.converged);
  CHECK(r.iterations == 50);
  double expected = 5.0 * std::pow(rho, 50);
  CHECK(rel_close(r.final_bracket_width, expected, 1e-12));
}

TEST_CASE("golden_section: works without smoothness") {
  ScalarFunction f{parse("abs(x-0.3)")};
  SolveOptions opts;
  opts.method = Method::Golden;
  MinimizeResult r = golden_section(f, Interval(0.0, 1.0), opts);
  CHECK(std::abs(r.x_min - 0.3) <= 1e-6);
}

TEST_CASE("golden_section and brent agree on the pipe objective") {
  ScalarFunction f{parse("3/sin(x)+6/cos(x)")};
  Interval iv(0.01, std::numbers::pi / 2 - 0.01);
  MinimizeResult g = golden_section(f, iv);
  MinimizeResult b = brent_min(f, iv);
  CHECK(std::abs(g.x_min - b.x_min) <= 1e-5);
}

TEST_CASE("brent_min: few evaluations on an exact quadratic") {
  ScalarFunction f{parse("(x-2)^2")};
  MinimizeResult r = brent_min(f, Interval(0.0, 5.0));
  CHECK(r.converged);
  CHECK(std::abs(r.x_min - 2.0) <= 1e-7);
  CHECK(r.function_evaluations <= 15);
}

TEST_CASE("brent_min: flat quartic bottom") {
  ScalarFunction f{parse("x^4")};
  MinimizeResult r = brent_min(f, Interval(-1.0, 2.0));
  CHECK(std::abs(r.x_min) <= 1e-4);
}

TEST_CASE("brent_min beats golden_section on the pipe objective") {
  ScalarFunction f{parse("3/sin(x)+6/cos(x)")};
  Interval iv(0.0, std::numbers::pi / 2);
  MinimizeResult b = brent_min(f, iv);
  MinimizeResult g = golden_section(f, iv);
  CHECK(b.function_evaluations < g.function_evaluations);
  CHECK(std::abs(b.x_min - g.x_min) <= 10 * 1e-8 * 10);
}

TEST_CASE("containment and converged-width invariants") {
  for (const CorpusEntry& entry : smooth_corpus()) {
    ScalarFunction f{parse(entry.text)};
    for (Method m : {Method::Brent, Method::Golden}) {
      SolveOptions opts;
      opts.method = m;
      MinimizeResult r = minimize_bounded(f, Interval(entry.lo, entry.hi), opts);
      CHECK(r.x_min >= entry.lo);
      CHECK(r.x_min <= entry.hi);
      if (r.converged) {
        CHECK(r.final_bracket_width <=
              2.0 * opts.x_tolerance * std::max(1.0, std::abs(r.x_min)));
      }
    }
  }
}

TEST_CASE("methods agree on strictly unimodal corpus") {
  SolveOptions opts;
  for (const CorpusEntry& entry : smooth_corpus()) {
    ScalarFunction f{parse(entry.text)};
    Interval iv(entry.lo, entry.hi);
    SolveOptions gold = opts;
    gold.method = Method::Golden;
    MinimizeResult b = brent_min(f, iv, opts);
    MinimizeResult g = golden_section(f, iv, gold);
    CAPTURE(entry.text);
    CHECK(std::abs(b.x_min - g.x_min) <= 10 * opts.x_tolerance *
                                             std::max(1.0, std::abs(b.x_min)));
  }
}

TEST_CASE("monotone best-so-far iterates") {
  // Wrap the corpus functions to record every probe; the running minimum
  // over probes must never increase between iterations of either method.
  for (const CorpusEntry& entry : smooth_corpus()) {
    Expr e = parse(entry.text);
    auto history = std::make_shared<std::vector<double>>();
    ScalarFunction recorded = ScalarFunction::from_callable(
        "recorded", [e, history](double x) -> std::optional<double> {
          auto v = try_eval(e, x);
          if (v) history->push_back(*v);
          return v;
        });
    for (Method m : {Method::Brent, Method::Golden}) {
      history->clear();
      SolveOptions opts;
      opts.method = m;
      minimize_bounded(recorded, Interval(entry.lo, entry.hi), opts);
      double best = std::numeric_limits<double>::infinity();
      std::vector<double> bests;
      for (double v : *history) {
        best = std::min(best, v);
        bests.push_back(best);
      }
      CHECK(std::is_sorted(bests.rbegin(), bests.rend()));
    }
  }
}

TEST_CASE("max_iterations returns unconverged, not an error") {
  ScalarFunction f{parse("(x-2)^2")};
  SolveOptions opts;
  opts.max_iterations = 2;
  MinimizeResult r = minimize_bounded(f, Interval(0.0, 5.0), opts);
  CHECK(!r.converged);
  CHECK(r.iterations == 2);
}

TEST_CASE("NoEvaluablePoint when every probe faults") {
  ScalarFunction f = ScalarFunction::from_callable(
      "nowhere", [](double) { return std::optional<double>{}; });
  CHECK_THROWS_AS(minimize_bounded(f, Interval(0.0, 1.0)), NoEvaluablePoint);
  SolveOptions gold;
  gold.method = Method::Golden;
  CHECK_THROWS_AS(minimize_bounded(f, Interval(0.0, 1.0), gold),
                  NoEvaluablePoint);
}

TEST_CASE("solver skates past poles near the margin") {
  // L(alpha) diverges at both ends of (0, pi/2); the margin policy keeps
  // probes interior and the solve still converges.
  ScalarFunction f = pipe_curve(PipeModel{3.0, 6.0});
  MinimizeResult r = minimize_bounded(f, Interval(0.0, std::numbers::pi / 2));
  CHECK(r.converged);
  CHECK(std::abs(r.x_min - kPipeAlphaStar) <= 1e-6);
}

TEST_CASE("interval and option validation") {
  CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Interval(1.0, 1.0), std::invalid_argument);
  ScalarFunction f{parse("x^2")};
  SolveOptions opts;
  opts.x_tolerance = -1.0;
  CHECK_THROWS_AS(minimize_bounded(f, Interval(0.0, 1.0), opts),
                  std::invalid_argument);
  opts = SolveOptions{};
  opts.endpoint_margin = 0.5;
  CHECK_THROWS_AS(minimize_bounded(f, Interval(0.0, 1.0), opts),
                  std::invalid_argument);
}

TEST_CASE("bracket_minimum: parabola, monotone ray, pipe curve") {
  ScalarFunction f{parse("(x-2)^2")};
  Bracket br = bracket_minimum(f, 0.0, 0.1);
  CHECK(br.a < br.b);
  CHECK(br.b < br.c);
  CHECK(br.a <= 2.0);
  CHECK(br.c >= 2.0);
  double fa = *f.try_eval(br.a), fb = *f.try_eval(br.b), fc = *f.try_eval(br.c);
  CHECK(fb < fa);
  CHECK(fb < fc);

  ScalarFunction g{parse("exp(x)")};
  CHECK_THROWS_AS(bracket_minimum(g, 0.0, 0.1), BracketFailure);

  ScalarFunction pipe = pipe_curve(PipeModel{3.0, 6.0});
  Bracket bp = bracket_minimum(pipe, 0.5, 0.05);
  CHECK(bp.a <= kPipeAlphaStar);
  CHECK(bp.c >= kPipeAlphaStar);

  // x0 must be evaluable
  ScalarFunction sq{parse("sqrt(x)")};
  CHECK_THROWS_AS(bracket_minimum(sq, -2.0, 0.1), DomainFault);
  CHECK_THROWS_AS(bracket_minimum(sq, 1.0, -0.1), std::invalid_argument);
}
