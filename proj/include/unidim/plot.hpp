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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unidim/function.hpp"
#include "unidim/optimize.hpp"

namespace unidim {

/// Uniformly sampled curve. Sample positions where the function faulted
/// keep their x but carry no y; the polyline breaks there.
struct PlotSeries {
  struct Sample {
    double x;
    std::optional<double> y;
  };

  std::vector<Sample> samples;  // x strictly increasing; present y finite

  std::vector<std::size_t> gaps() const;  // indices of faulted samples
  std::size_t finite_count() const;
};

/// n uniform samples of f over iv. Faulting positions become gaps, never
/// silently dropped. Throws AllPointsFault if every sample faults.
PlotSeries sample(const ScalarFunction& f, const Interval& iv, int n);

/// CSV text: header "x,y", one row per sample, empty y field on gaps,
/// LF line endings, shortest round-trip decimals.
std::string emit_csv(const PlotSeries& series);

struct PlotMarker {
  double x;
  double y;
  std::string label;
};

/// Standalone SVG document: axes with tick labels, one polyline per
/// gap-free run, optional marker circles with labels. Output is
/// deterministic for identical inputs.
std::string emit_svg(const PlotSeries& series, int width_px, int height_px,
                     const std::vector<PlotMarker>& markers = {});

}  // namespace unidim
