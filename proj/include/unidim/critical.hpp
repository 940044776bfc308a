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

enum class ExtremumKind { LocalMin, LocalMax, NotExtremum, Inconclusive };
enum class DerivativeTest { FirstDerivative, SecondDerivative };
enum class Direction { Increasing, Decreasing };

const char* to_label(ExtremumKind kind);
const char* to_label(DerivativeTest test);
const char* to_label(Direction direction);

struct CriticalPoint {
  double x;
  double f_value;
  ExtremumKind kind;
  DerivativeTest test_used;
  double derivative_residual;  // |f'(x)| at the reported point
};

struct MonotonicSegment {
  Interval interval;
  Direction direction;
};

struct CriticalOptions {
  int grid_points = 1001;
  /// Residual acceptance for reported points: |f'| must come back under
  /// this after refinement, which a finite-difference derivative can only
  /// do down to its noise floor.
  double root_tolerance = 1e-8;
  /// |f'| at or below this counts as zero in sign probes.
  double zero_threshold = 1e-10;
  /// Second-derivative test threshold: scale * max(1, |f(x_c)|).
  double curvature_threshold_scale = 1e-8;
  /// Standoff of the first-derivative test probes; 0 selects
  /// max(1e-6, 10 * root_tolerance).
  double probe_delta = 0.0;
};

/// The derivative of f as a ScalarFunction: symbolic when f is
/// expression-backed, a central finite difference otherwise.
ScalarFunction derivative_function(const ScalarFunction& f);

/// Grid cells [x_i, x_{i+1}] whose endpoint derivative signs strictly
/// oppose. Faulting grid nodes are skipped (their cells are not
/// reported). An empty result is valid.
std::vector<Interval> scan_sign_changes(const ScalarFunction& df,
                                        const Interval& iv, int grid_points);

/// Bisection on df until the cell is narrower than root_tolerance; returns
/// the midpoint of the final cell. Throws PreconditionViolation unless the
/// endpoint signs straddle zero.
double refine_root(const ScalarFunction& df, const Interval& cell,
                   double root_tolerance);

/// First derivative test at x_c: the sign change of df across the point
/// decides. A probe below zero_threshold in magnitude is inconclusive.
/// Throws DomainFault when a probe faults.
ExtremumKind classify_first_derivative(const ScalarFunction& df, double x_c,
                                       double probe_delta,
                                       double zero_threshold = 1e-10);

/// Second derivative test from a precomputed f''(x_c).
ExtremumKind classify_second_derivative(double d2f_value,
                                        double curvature_threshold);

struct CriticalScan {
  std::vector<CriticalPoint> points;  // sorted by x
  std::vector<std::string> warnings;
};

/// Locate and classify the critical points of f inside iv: grid scan of
/// f' sign changes, bisection refinement, then the second-derivative test
/// with a first-derivative fallback when it is inconclusive. Points whose
/// probes fault or whose derivative residual exceeds root_tolerance are
/// dropped with a warning.
CriticalScan find_critical_points(const ScalarFunction& f, const Interval& iv,
                                  const CriticalOptions& opts = {});

struct MonotonicReport {
  std::vector<MonotonicSegment> segments;  // disjoint, ordered
  std::vector<std::string> warnings;
};

/// Split iv at the critical points and label each piece by the sign of f'
/// at its midpoint. Segments whose midpoint derivative is below
/// zero_threshold (or faults) are omitted with a warning.
MonotonicReport monotonic_intervals(const ScalarFunction& f, const Interval& iv,
                                    const CriticalOptions& opts = {});

}  // namespace unidim
