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

#include "unidim/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "unidim/format.hpp"

namespace unidim {

namespace {

void check_pipe(const PipeModel& m) {
  if (!(m.width_a > 0.0) || !(m.width_b > 0.0) || !std::isfinite(m.width_a) ||
      !std::isfinite(m.width_b)) {
    throw std::invalid_argument("pipe corridor widths must be positive");
  }
}

void check_cinema(const CinemaModel& m) {
  if (!(m.bottom >= 0.0) || !(m.top > m.bottom) || !std::isfinite(m.top)) {
    throw std::invalid_argument("cinema model requires 0 <= bottom < top");
  }
}

}  // namespace

double pipe_length(double alpha, const PipeModel& m) {
  check_pipe(m);
  if (!(alpha > 0.0) || !(alpha < std::numbers::pi / 2)) {
    throw DomainFault("pipe angle out of (0, pi/2): alpha = " +
                      shortest_decimal(alpha));
  }
  double value = m.width_a / std::sin(alpha) + m.width_b / std::cos(alpha);
  if (!std::isfinite(value)) {
    throw DomainFault("pipe length overflow at alpha = " +
                      shortest_decimal(alpha));
  }
  return value;
}

ScalarFunction pipe_curve(const PipeModel& m) {
  check_pipe(m);
  return ScalarFunction::from_callable(
      "pipe(a=" + sig6(m.width_a) + ", b=" + sig6(m.width_b) + ")",
      [m](double alpha) -> std::optional<double> {
        if (!(alpha > 0.0) || !(alpha < std::numbers::pi / 2)) {
          return std::nullopt;
        }
        return m.width_a / std::sin(alpha) + m.width_b / std::cos(alpha);
      });
}

PipeSolution pipe_max_length(const PipeModel& m, const SolveOptions& opts) {
  check_pipe(m);
  MinimizeResult r =
      minimize_bounded(pipe_curve(m), Interval(0.0, std::numbers::pi / 2), opts);
  return PipeSolution{r.x_min, r.f_min, r};
}

double cinema_angle(double x, const CinemaModel& m) {
  check_cinema(m);
  if (!(x > 0.0)) {
    throw DomainFault("viewer distance must be positive: x = " +
                      shortest_decimal(x));
  }
  return std::atan(m.top / x) - std::atan(m.bottom / x);
}

ScalarFunction cinema_curve(const CinemaModel& m) {
  check_cinema(m);
  return ScalarFunction::from_callable(
      "cinema(top=" + sig6(m.top) + ", bottom=" + sig6(m.bottom) + ")",
      [m](double x) -> std::optional<double> {
        if (!(x > 0.0)) return std::nullopt;
        return std::atan(m.top / x) - std::atan(m.bottom / x);
      });
}

CinemaSolution cinema_best_distance(const CinemaModel& m, const Interval& search,
                                    const SolveOptions& opts) {
  check_cinema(m);
  CinemaSolution solution;
  MinimizeResult r = maximize_bounded(cinema_curve(m), search, opts);
  solution.x_star = r.x_min;
  solution.theta_star = r.f_min;
  solution.details = r;
  if (m.bottom == 0.0) {
    solution.warnings.push_back(
        "boundary optimum: with bottom = 0 the angle increases all the way "
        "to the screen; reported x* is the search bound");
  }
  return solution;
}

}  // namespace unidim
