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

#include "unidim/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "unidim/format.hpp"

namespace unidim {

std::vector<std::size_t> PlotSeries::gaps() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!samples[i].y) out.push_back(i);
  }
  return out;
}

std::size_t PlotSeries::finite_count() const {
  return samples.size() - gaps().size();
}

PlotSeries sample(const ScalarFunction& f, const Interval& iv, int n) {
  if (n < 2) throw std::invalid_argument("need at least 2 samples");
  PlotSeries series;
  series.samples.reserve(static_cast<std::size_t>(n));
  const double step = iv.width() / (n - 1);
  for (int i = 0; i < n; ++i) {
    double x = (i == n - 1) ? iv.hi : iv.lo + i * step;
    series.samples.push_back({x, f.try_eval(x)});
  }
  if (series.finite_count() == 0) {
    throw AllPointsFault("every sample position faulted");
  }
  return series;
}

std::string emit_csv(const PlotSeries& series) {
  std::string out = "x,y\n";
  for (const PlotSeries::Sample& s : series.samples) {
    out += shortest_decimal(s.x);
    out += ',';
    if (s.y) out += shortest_decimal(*s.y);
    out += '\n';
  }
  return out;
}

namespace {

// %g rendering for axis tick labels (humans, not round-trips).
std::string tick_label(double v) {
  char buf[32];
  int n = std::snprintf(buf, sizeof(buf), "%g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string px(double v) {
  char buf[32];
  int n = std::snprintf(buf, sizeof(buf), "%.2f", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

// Largest 1/2/5 * 10^k step that yields at most `max_ticks` ticks.
double nice_step(double range, int max_ticks) {
  double raw = range / max_ticks;
  double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (mag * m >= raw) return mag * m;
  }
  return mag * 10.0;
}

// Ticks from the first step multiple at or above lo up to hi. A step that
// underflows (subnormal-width ranges) yields no ticks rather than a spin.
std::vector<double> tick_positions(double lo, double hi, double step) {
  std::vector<double> ticks;
  if (!(step > 0.0) || !std::isfinite(step)) return ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-12 * step;
       t += step) {
    ticks.push_back(t);
    if (ticks.size() > 64) break;
  }
  return ticks;
}

}  // namespace

std::string emit_svg(const PlotSeries& series, int width_px, int height_px,
                     const std::vector<PlotMarker>& markers) {
  if (series.samples.empty()) {
    throw std::invalid_argument("cannot plot an empty series");
  }
  const double margin_left = 64.0, margin_right = 16.0;
  const double margin_top = 16.0, margin_bottom = 40.0;
  const double plot_w = width_px - margin_left - margin_right;
  const double plot_h = height_px - margin_top - margin_bottom;

  double x_min = series.samples.front().x;
  double x_max = series.samples.back().x;
  double y_min = 0.0, y_max = 0.0;
  bool first = true;
  for (const PlotSeries::Sample& s : series.samples) {
    if (!s.y) continue;
    if (first) {
      y_min = y_max = *s.y;
      first = false;
    } else {
      y_min = std::min(y_min, *s.y);
      y_max = std::max(y_max, *s.y);
    }
  }
  for (const PlotMarker& m : markers) {
    y_min = std::min(y_min, m.y);
    y_max = std::max(y_max, m.y);
  }
  if (y_max - y_min < 1e-300) {  // flat curve: open up a band around it
    y_min -= 1.0;
    y_max += 1.0;
  } else {
    double pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;
  }

  auto sx = [&](double x) {
    return margin_left + (x - x_min) / (x_max - x_min) * plot_w;
  };
  auto sy = [&](double y) {
    return margin_top + (y_max - y) / (y_max - y_min) * plot_h;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width_px) + "\" height=\"" + std::to_string(height_px) +
         "\" viewBox=\"0 0 " + std::to_string(width_px) + " " +
         std::to_string(height_px) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes box
  svg += "<rect x=\"" + px(margin_left) + "\" y=\"" + px(margin_top) +
         "\" width=\"" + px(plot_w) + "\" height=\"" + px(plot_h) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // ticks and grid lines
  for (double t : tick_positions(x_min, x_max, nice_step(x_max - x_min, 8))) {
    double gx = sx(t);
    svg += "<line x1=\"" + px(gx) + "\" y1=\"" + px(margin_top) + "\" x2=\"" +
           px(gx) + "\" y2=\"" + px(margin_top + plot_h) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + px(gx) + "\" y=\"" + px(margin_top + plot_h + 18.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\">" +
           tick_label(t) + "</text>\n";
  }
  for (double t : tick_positions(y_min, y_max, nice_step(y_max - y_min, 6))) {
    double gy = sy(t);
    svg += "<line x1=\"" + px(margin_left) + "\" y1=\"" + px(gy) + "\" x2=\"" +
           px(margin_left + plot_w) + "\" y2=\"" + px(gy) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + px(margin_left - 6.0) + "\" y=\"" + px(gy + 4.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"end\">" +
           tick_label(t) + "</text>\n";
  }

  // one polyline per gap-free run
  std::string points;
  auto flush_run = [&]() {
    if (!points.empty()) {
      svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" "
             "points=\"" +
             points + "\"/>\n";
      points.clear();
    }
  };
  for (const PlotSeries::Sample& s : series.samples) {
    if (!s.y) {
      flush_run();
      continue;
    }
    if (!points.empty()) points += ' ';
    points += px(sx(s.x)) + "," + px(sy(*s.y));
  }
  flush_run();

  for (const PlotMarker& m : markers) {
    svg += "<circle cx=\"" + px(sx(m.x)) + "\" cy=\"" + px(sy(m.y)) +
           "\" r=\"3.5\" fill=\"#d62728\"/>\n";
    svg += "<text x=\"" + px(sx(m.x) + 8.0) + "\" y=\"" + px(sy(m.y) - 8.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + m.label +
           "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace unidim
