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

#include "unidim/critical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unidim/format.hpp"
#include "unidim/numdiff.hpp"

namespace unidim {

const char* to_label(ExtremumKind kind) {
  switch (kind) {
    case ExtremumKind::LocalMin: return "local-min";
    case ExtremumKind::LocalMax: return "local-max";
    case ExtremumKind::NotExtremum: return "not-extremum";
    case ExtremumKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_label(DerivativeTest test) {
  return test == DerivativeTest::FirstDerivative ? "first-derivative"
                                                 : "second-derivative";
}

const char* to_label(Direction direction) {
  return direction == Direction::Increasing ? "increasing" : "decreasing";
}

ScalarFunction derivative_function(const ScalarFunction& f) {
  if (std::optional<Expr> e = f.symbolic()) {
    return ScalarFunction(simplify(differentiate(*e)));
  }
  return ScalarFunction::from_callable(
      "d/dx " + f.label(), [f](double x) -> std::optional<double> {
        try {
          return central_diff(f, x);
        } catch (const DomainFault&) {
          return std::nullopt;
        }
      });
}

std::vector<Interval> scan_sign_changes(const ScalarFunction& df,
                                        const Interval& iv, int grid_points) {
  if (grid_points < 3) {
    throw std::invalid_argument("grid_points must be >= 3");
  }
  const double step = iv.width() / (grid_points - 1);
  std::vector<Interval> cells;
  double prev_x = iv.lo;
  std::optional<double> prev_v = df.try_eval(prev_x);
  for (int i = 1; i < grid_points; ++i) {
    double x = (i == grid_points - 1) ? iv.hi : iv.lo + i * step;
    std::optional<double> v = df.try_eval(x);
    if (prev_v && v && ((*prev_v < 0.0 && *v > 0.0) || (*prev_v > 0.0 && *v < 0.0))) {
      cells.emplace_back(prev_x, x);
    }
    prev_x = x;
    prev_v = v;
  }
  return cells;
}

namespace {

// Bisect df's sign change inside [lo, hi] until the cell is narrower than
// tol or cannot split further. Probe faults surface as DomainFault.
double bisect(const ScalarFunction& df, double lo, double hi, double flo,
              double tol) {
  bool lo_negative = flo < 0.0;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // floating resolution reached
    double fm = df(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double refine_root(const ScalarFunction& df, const Interval& cell,
                   double root_tolerance) {
  if (!(root_tolerance > 0.0)) {
    throw std::invalid_argument("root_tolerance must be positive");
  }
  double flo = df(cell.lo);
  double fhi = df(cell.hi);
  if (!((flo < 0.0 && fhi > 0.0) || (flo > 0.0 && fhi < 0.0))) {
    throw PreconditionViolation("derivative signs do not straddle zero on [" +
                                shortest_decimal(cell.lo) + ", " +
                                shortest_decimal(cell.hi) + "]");
  }
  return bisect(df, cell.lo, cell.hi, flo, root_tolerance);
}

ExtremumKind classify_first_derivative(const ScalarFunction& df, double x_c,
                                       double probe_delta,
                                       double zero_threshold) {
  if (!(probe_delta > 0.0)) {
    throw std::invalid_argument("probe_delta must be positive");
  }
  double left = df(x_c - probe_delta);
  double right = df(x_c + probe_delta);
  if (std::abs(left) <= zero_threshold || std::abs(right) <= zero_threshold) {
    return ExtremumKind::Inconclusive;
  }
  if (left > 0.0 && right < 0.0) return ExtremumKind::LocalMax;
  if (left < 0.0 && right > 0.0) return ExtremumKind::LocalMin;
  return ExtremumKind::NotExtremum;
}

ExtremumKind classify_second_derivative(double d2f_value,
                                        double curvature_threshold) {
  if (d2f_value > curvature_threshold) return ExtremumKind::LocalMin;
  if (d2f_value < -curvature_threshold) return ExtremumKind::LocalMax;
  return ExtremumKind::Inconclusive;
}

CriticalScan find_critical_points(const ScalarFunction& f, const Interval& iv,
                                  const CriticalOptions& opts) {
  CriticalScan scan;
  const ScalarFunction df = derivative_function(f);
  const double delta =
      opts.probe_delta > 0.0 ? opts.probe_delta
                             : std::max(1e-6, 10.0 * opts.root_tolerance);
  const double cell_width = iv.width() / (opts.grid_points - 1);

  // Sign-change cells, bisected down to floating resolution so the
  // derivative residual at the reported point is as small as f' allows.
  std::vector<double> candidates;
  for (const Interval& cell : scan_sign_changes(df, iv, opts.grid_points)) {
    try {
      double flo = df(cell.lo);
      candidates.push_back(bisect(df, cell.lo, cell.hi, flo, 0.0));
    } catch (const DomainFault&) {
      scan.warnings.push_back("derivative fault while refining in [" +
                              shortest_decimal(cell.lo) + ", " +
                              shortest_decimal(cell.hi) + "]; point dropped");
    }
  }

  // Grid nodes where f' is already below the zero threshold are roots the
  // strict sign product misses (for example x^2 with a node at 0 exactly,
  // or x^3 whose derivative touches zero without crossing). A run of such
  // nodes yields one candidate at its middle, and only when nonzero nodes
  // flank it on both sides -- a plateau of df == 0 (constant f) yields
  // nothing.
  std::vector<double> xs(static_cast<std::size_t>(opts.grid_points));
  std::vector<std::optional<double>> vs(xs.size());
  for (int i = 0; i < opts.grid_points; ++i) {
    xs[i] = (i == opts.grid_points - 1)
                ? iv.hi
                : iv.lo + i * (iv.width() / (opts.grid_points - 1));
    vs[i] = df.try_eval(xs[i]);
  }
  auto near_zero = [&](int i) {
    return vs[i] && std::abs(*vs[i]) <= opts.zero_threshold;
  };
  auto nonzero = [&](int i) {
    return vs[i] && std::abs(*vs[i]) > opts.zero_threshold;
  };
  for (int i = 1; i + 1 < opts.grid_points;) {
    if (!near_zero(i) || !nonzero(i - 1)) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < opts.grid_points && near_zero(j + 1)) ++j;
    if (j + 1 < opts.grid_points && nonzero(j + 1)) {
      double x = xs[(i + j) / 2];
      bool duplicate = false;
      for (double c : candidates) {
        if (std::abs(c - x) <= 0.5 * cell_width) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) candidates.push_back(x);
    }
    i = j + 1;
  }

  std::sort(candidates.begin(), candidates.end());

  const bool have_symbolic = f.symbolic().has_value();
  std::optional<ScalarFunction> d2f;
  if (have_symbolic) d2f = derivative_function(df);

  for (double x_c : candidates) {
    std::optional<double> fv = f.try_eval(x_c);
    std::optional<double> dv = df.try_eval(x_c);
    if (!fv || !dv) {
      scan.warnings.push_back("probe fault at x = " + shortest_decimal(x_c) +
                              "; point dropped");
      continue;
    }
    double residual = std::abs(*dv);
    if (residual > opts.root_tolerance) {
      // Sign flip without a root underneath (a pole of f'), or a root the
      // bisection could not localize; either way not a critical point.
      scan.warnings.push_back("derivative residual " +
                              shortest_decimal(residual) + " at x = " +
                              shortest_decimal(x_c) + "; point dropped");
      continue;
    }

    ExtremumKind kind = ExtremumKind::Inconclusive;
    DerivativeTest test = DerivativeTest::SecondDerivative;
    std::optional<double> d2;
    if (d2f) {
      d2 = d2f->try_eval(x_c);
    } else {
      try {
        d2 = second_diff(f, x_c);
      } catch (const DomainFault&) {
        d2 = std::nullopt;
      }
    }
    if (d2) {
      double threshold =
          opts.curvature_threshold_scale * std::max(1.0, std::abs(*fv));
      kind = classify_second_derivative(*d2, threshold);
    }
    if (kind == ExtremumKind::Inconclusive) {
      try {
        ExtremumKind first =
            classify_first_derivative(df, x_c, delta, opts.zero_threshold);
        if (first != ExtremumKind::Inconclusive) {
          kind = first;
          test = DerivativeTest::FirstDerivative;
        }
      } catch (const DomainFault&) {
        scan.warnings.push_back("first-derivative probes fault at x = " +
                                shortest_decimal(x_c));
      }
    }
    scan.points.push_back({x_c, *fv, kind, test, residual});
  }
  return scan;
}

MonotonicReport monotonic_intervals(const ScalarFunction& f, const Interval& iv,
                                    const CriticalOptions& opts) {
  MonotonicReport report;
  CriticalScan scan = find_critical_points(f, iv, opts);
  report.warnings = std::move(scan.warnings);

  const ScalarFunction df = derivative_function(f);
  std::vector<double> bounds;
  bounds.push_back(iv.lo);
  for (const CriticalPoint& p : scan.points) {
    if (p.x > bounds.back()) bounds.push_back(p.x);
  }
  if (iv.hi > bounds.back()) bounds.push_back(iv.hi);

  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    Interval segment(bounds[i], bounds[i + 1]);
    std::optional<double> dm = df.try_eval(segment.midpoint());
    if (!dm || std::abs(*dm) <= opts.zero_threshold) {
      report.warnings.push_back("unlabeled segment [" +
                                shortest_decimal(segment.lo) + ", " +
                                shortest_decimal(segment.hi) +
                                "]: derivative at midpoint is zero or faults");
      continue;
    }
    report.segments.push_back(
        {segment, *dm > 0.0 ? Direction::Increasing : Direction::Decreasing});
  }
  return report;
}

}  // namespace unidim
