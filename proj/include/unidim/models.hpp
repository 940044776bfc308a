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

#include <string>
#include <vector>

#include "unidim/function.hpp"
#include "unidim/optimize.hpp"

namespace unidim {

/// L-shaped corner between corridors of widths a and b. The longest pipe
/// that fits is the minimum over alpha in (0, pi/2) of
/// L(alpha) = a/sin(alpha) + b/cos(alpha); the closed-form optimum sits at
/// tan(alpha*)^3 = a/b with L* = (a^(2/3) + b^(2/3))^(3/2).
struct PipeModel {
  double width_a = 3.0;
  double width_b = 6.0;
};

/// a/sin(alpha) + b/cos(alpha). Throws DomainFault at or beyond the
/// endpoints of (0, pi/2).
double pipe_length(double alpha, const PipeModel& m);

/// L(alpha) as a ScalarFunction over the open interval (0, pi/2).
ScalarFunction pipe_curve(const PipeModel& m);

struct PipeSolution {
  double alpha_star;   // radians
  double length_star;  // the longest pipe that fits
  MinimizeResult details;
};

PipeSolution pipe_max_length(const PipeModel& m, const SolveOptions& opts = {});

/// Screen spanning heights [bottom, top] above eye level, viewer at
/// horizontal distance x. The viewing angle
/// theta(x) = atan(top/x) - atan(bottom/x) peaks at x* = sqrt(top*bottom).
struct CinemaModel {
  double top = 10.0;
  double bottom = 3.0;
};

/// atan(top/x) - atan(bottom/x). Throws DomainFault for x <= 0.
double cinema_angle(double x, const CinemaModel& m);

/// theta(x) as a ScalarFunction over x > 0.
ScalarFunction cinema_curve(const CinemaModel& m);

struct CinemaSolution {
  double x_star;
  double theta_star;  // radians
  MinimizeResult details;
  std::vector<std::string> warnings;
};

/// Maximize theta over the search interval. With bottom = 0 the angle
/// grows monotonically toward the screen and the reported optimum is the
/// search boundary; a BoundaryOptimum warning records that.
CinemaSolution cinema_best_distance(const CinemaModel& m, const Interval& search,
                                    const SolveOptions& opts = {});

}  // namespace unidim
