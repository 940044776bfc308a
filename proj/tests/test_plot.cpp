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

#include <cmath>
#include <string>

#include <doctest.h>

#include "unidim/expr.hpp"
#include "unidim/models.hpp"

using namespace unidim;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& what) {
  std::size_t n = 0, pos = 0;
  while ((pos = text.find(what, pos)) != std::string::npos) {
    ++n;
    pos += what.size();
  }
  return n;
}

}  // namespace

TEST_CASE("sample: pipe curve interior is gap-free") {
  PlotSeries s = sample(pipe_curve(PipeModel{3.0, 6.0}),
                        Interval(0.05, 1.52), 200);
  CHECK(s.samples.size() == 200);
  CHECK(s.finite_count() == 200);
  CHECK(s.gaps().empty());
}

TEST_CASE("sample: csc pole lands on a sample and becomes a gap") {
  PlotSeries s = sample(ScalarFunction{parse("csc(x)")}, Interval(-1.0, 1.0),
                        201);
  auto gaps = s.gaps();
  REQUIRE(gaps.size() == 1);
  CHECK(gaps[0] == 100);
  CHECK(s.samples[100].x == 0.0);
}

TEST_CASE("sample: two-point identity line") {
  PlotSeries s = sample(ScalarFunction{parse("x")}, Interval(0.0, 1.0), 2);
  REQUIRE(s.samples.size() == 2);
  CHECK(s.samples[0].x == 0.0);
  CHECK(*s.samples[0].y == 0.0);
  CHECK(s.samples[1].x == 1.0);
  CHECK(*s.samples[1].y == 1.0);
}

TEST_CASE("sample: monotone x, every present y finite") {
  PlotSeries s = sample(ScalarFunction{parse("tan(x)")}, Interval(-3.0, 3.0),
                        307);
  for (std::size_t i = 1; i < s.samples.size(); ++i) {
    CHECK(s.samples[i].x > s.samples[i - 1].x);
  }
  for (const auto& p : s.samples) {
    if (p.y) CHECK(std::isfinite(*p.y));
  }
}

TEST_CASE("sample: AllPointsFault when nothing evaluates") {
  ScalarFunction f{parse("sqrt(-1-x^2)")};
  CHECK_THROWS_AS(sample(f, Interval(0.0, 1.0), 10), AllPointsFault);
}

TEST_CASE("emit_csv: header, row count, gap rows") {
  PlotSeries s = sample(ScalarFunction{parse("csc(x)")}, Interval(-1.0, 1.0),
                        201);
  std::string csv = emit_csv(s);
  CHECK(csv.rfind("x,y\n", 0) == 0);
  CHECK(count_occurrences(csv, "\n") == 202);  // header + 201 rows
  CHECK(csv.find("\n0,\n") != std::string::npos);  // empty y at the pole
  CHECK(csv.find("\r") == std::string::npos);      // LF only
}

TEST_CASE("emit_csv: shortest round-trip decimals") {
  PlotSeries s;
  s.samples.push_back({0.1, 12.485814554824389});
  s.samples.push_back({0.670883, std::nullopt});
  std::string csv = emit_csv(s);
  CHECK(csv == "x,y\n0.1,12.485814554824389\n0.670883,\n");
}

TEST_CASE("emit_svg: structure, polylines, markers") {
  PlotSeries s = sample(ScalarFunction{parse("csc(x)")}, Interval(-1.0, 1.0),
                        201);
  std::string svg = emit_svg(s, 800, 600);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_occurrences(svg, "<polyline") == s.gaps().size() + 1);
  CHECK(svg.find("href") == std::string::npos);  // no external references

  PlotSeries pipe = sample(pipe_curve(PipeModel{3.0, 6.0}),
                           Interval(0.05, 1.52), 200);
  std::vector<PlotMarker> markers = {
      {0.6708879787125153, 12.485814554824389, "min"}};
  std::string pipe_svg = emit_svg(pipe, 800, 600, markers);
  CHECK(count_occurrences(pipe_svg, "<polyline") == 1);
  CHECK(pipe_svg.find("<circle") != std::string::npos);
  CHECK(pipe_svg.find(">min</text>") != std::string::npos);
}

TEST_CASE("emit_svg and emit_csv are deterministic") {
  PlotSeries s = sample(ScalarFunction{parse("sin(x)/x")}, Interval(-8.0, 8.0),
                        333);
  CHECK(emit_csv(s) == emit_csv(s));
  CHECK(emit_svg(s, 640, 480) == emit_svg(s, 640, 480));
}

TEST_CASE("sample validation") {
  ScalarFunction f{parse("x")};
  CHECK_THROWS_AS(sample(f, Interval(0.0, 1.0), 1), std::invalid_argument);
}

TEST_CASE("emit_svg: degenerate ranges still terminate") {
  // flat curve
  PlotSeries flat = sample(ScalarFunction{parse("3")}, Interval(0.0, 1.0), 10);
  std::string svg = emit_svg(flat, 400, 300);
  CHECK(svg.find("</svg>") != std::string::npos);

  // subnormal-width x range
  PlotSeries narrow =
      sample(ScalarFunction{parse("x")}, Interval(0.0, 1e-300), 5);
  std::string svg2 = emit_svg(narrow, 400, 300);
  CHECK(svg2.find("</svg>") != std::string::npos);
}
