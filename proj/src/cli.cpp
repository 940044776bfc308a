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

#include "unidim/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "unidim/critical.hpp"
#include "unidim/expr.hpp"
#include "unidim/format.hpp"
#include "unidim/models.hpp"
#include "unidim/optimize.hpp"
#include "unidim/plot.hpp"

namespace unidim::cli {

namespace {

using nlohmann::json;

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

struct Emitter {
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;
  bool timing = false;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  // Timing is only reported on request so that repeated runs stay
  // byte-identical.
  double elapsed_ms() const {
    if (!timing) return 0.0;
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - started)
        .count();
  }

  void report(const std::string& command, json inputs, json result,
              const std::vector<std::string>& warnings,
              const std::string& text) {
    if (as_json) {
      json doc;
      doc["command"] = command;
      doc["inputs"] = std::move(inputs);
      doc["result"] = std::move(result);
      doc["warnings"] = warnings;
      doc["elapsed_ms"] = elapsed_ms();
      out << doc.dump(2) << "\n";
    } else {
      out << text;
      for (const std::string& w : warnings) err << "warning: " << w << "\n";
    }
  }
};

struct SolveFlags {
  double tol = 1e-8;
  int max_iter = 500;
  std::string method = "brent";

  SolveOptions options() const {
    SolveOptions opts;
    opts.x_tolerance = tol;
    opts.max_iterations = max_iter;
    opts.method = (method == "golden") ? Method::Golden : Method::Brent;
    return opts;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--tol", tol, "x tolerance")->capture_default_str();
    cmd->add_option("--max-iter", max_iter, "iteration cap")
        ->capture_default_str();
    cmd->add_option("--method", method, "solver: brent or golden")
        ->check(CLI::IsMember({"brent", "golden"}))
        ->capture_default_str();
  }
};

json result_json(const MinimizeResult& r, bool degrees) {
  return json{{"x", degrees ? r.x_min * kRadToDeg : r.x_min},
              {"f", r.f_min},
              {"iterations", r.iterations},
              {"evaluations", r.function_evaluations},
              {"converged", r.converged}};
}

std::string result_text(const MinimizeResult& r, bool degrees) {
  std::string s;
  s += "x* = " + sig6(degrees ? r.x_min * kRadToDeg : r.x_min) +
       (degrees ? " deg" : "") + "\n";
  s += "f* = " + sig6(r.f_min) + "\n";
  s += "iterations = " + std::to_string(r.iterations) + ", evaluations = " +
       std::to_string(r.function_evaluations) + ", converged = " +
       (r.converged ? "yes" : "no") + "\n";
  return s;
}

int finish_solve(Emitter& em, const std::string& command, json inputs,
                 const MinimizeResult& r, bool degrees,
                 const std::vector<std::string>& warnings = {}) {
  em.report(command, std::move(inputs), result_json(r, degrees), warnings,
            result_text(r, degrees));
  return r.converged ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"unidim - unidimensional optimization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // --json etc. may follow the subcommand

  bool as_json = false;
  bool timing = false;
  app.add_flag("--json", as_json, "emit a JSON report");
  app.add_flag("--timing", timing,
               "measure elapsed_ms (breaks byte-identical output)");

  // minimize / maximize
  std::string expr_text;
  double lo = 0.0, hi = 0.0;
  bool degrees = false;
  SolveFlags solve_flags;
  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--lo", lo, "lower bound")->required();
    cmd->add_option("--hi", hi, "upper bound")->required();
    cmd->add_flag("--degrees", degrees,
                  "bounds are degrees; reported x is converted back");
  };

  CLI::App* cmd_min = app.add_subcommand("minimize", "bounded minimization");
  cmd_min->add_option("expression", expr_text, "function of x")->required();
  add_bounds(cmd_min);
  solve_flags.attach(cmd_min);

  CLI::App* cmd_max = app.add_subcommand("maximize", "bounded maximization");
  cmd_max->add_option("expression", expr_text, "function of x")->required();
  add_bounds(cmd_max);
  solve_flags.attach(cmd_max);

  // critical-points / monotonic
  int grid = 1001;
  CLI::App* cmd_crit =
      app.add_subcommand("critical-points", "locate and classify f' roots");
  cmd_crit->add_option("expression", expr_text, "function of x")->required();
  add_bounds(cmd_crit);
  cmd_crit->add_option("--grid", grid, "scan grid points")
      ->capture_default_str();

  CLI::App* cmd_mono =
      app.add_subcommand("monotonic", "increasing/decreasing intervals");
  cmd_mono->add_option("expression", expr_text, "function of x")->required();
  add_bounds(cmd_mono);
  cmd_mono->add_option("--grid", grid, "scan grid points")
      ->capture_default_str();

  // model pipe / model cinema
  CLI::App* cmd_model = app.add_subcommand("model", "built-in applied models");
  cmd_model->require_subcommand(1);
  double pipe_a = 3.0, pipe_b = 6.0;
  CLI::App* cmd_pipe =
      cmd_model->add_subcommand("pipe", "longest pipe around an L corner");
  cmd_pipe->add_option("--a", pipe_a, "first corridor width")
      ->capture_default_str();
  cmd_pipe->add_option("--b", pipe_b, "second corridor width")
      ->capture_default_str();
  SolveFlags pipe_flags;
  pipe_flags.attach(cmd_pipe);

  double cin_top = 10.0, cin_bottom = 3.0, cin_lo = 0.1, cin_hi = 100.0;
  CLI::App* cmd_cinema =
      cmd_model->add_subcommand("cinema", "best viewing distance");
  cmd_cinema->add_option("--top", cin_top, "screen top above eye level")
      ->capture_default_str();
  cmd_cinema->add_option("--bottom", cin_bottom, "screen bottom above eye level")
      ->capture_default_str();
  cmd_cinema->add_option("--lo", cin_lo, "search lower bound")
      ->capture_default_str();
  cmd_cinema->add_option("--hi", cin_hi, "search upper bound")
      ->capture_default_str();
  SolveFlags cinema_flags;
  cinema_flags.attach(cmd_cinema);

  // plot
  int samples = 500, width = 800, height = 600;
  std::string out_path, csv_path;
  bool mark_min = false, mark_max = false;
  CLI::App* cmd_plot = app.add_subcommand("plot", "sampled curve as CSV/SVG");
  cmd_plot->add_option("expression", expr_text, "function of x")->required();
  add_bounds(cmd_plot);
  cmd_plot->add_option("--samples", samples, "sample count")
      ->capture_default_str();
  cmd_plot->add_option("--out", out_path, "write SVG to this path");
  cmd_plot->add_option("--csv", csv_path, "write CSV to this path");
  cmd_plot->add_option("--width", width, "SVG width px")->capture_default_str();
  cmd_plot->add_option("--height", height, "SVG height px")
      ->capture_default_str();
  cmd_plot->add_flag("--mark-min", mark_min, "mark the bounded minimum");
  cmd_plot->add_flag("--mark-max", mark_max, "mark the bounded maximum");

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  Emitter em{out, err, as_json, timing};

  try {
    const double to_rad = degrees ? kDegToRad : 1.0;
    const double from_rad = degrees ? kRadToDeg : 1.0;

    if (app.got_subcommand(cmd_min) || app.got_subcommand(cmd_max)) {
      bool maximizing = app.got_subcommand(cmd_max);
      ScalarFunction f{parse(expr_text)};
      Interval iv(lo * to_rad, hi * to_rad);
      SolveOptions opts = solve_flags.options();
      MinimizeResult r = maximizing ? maximize_bounded(f, iv, opts)
                                    : minimize_bounded(f, iv, opts);
      json inputs{{"expression", expr_text}, {"lo", lo},
                  {"hi", hi},                {"tol", solve_flags.tol},
                  {"max_iterations", solve_flags.max_iter},
                  {"method", solve_flags.method},
                  {"degrees", degrees}};
      return finish_solve(em, maximizing ? "maximize" : "minimize",
                          std::move(inputs), r, degrees);
    }

    if (app.got_subcommand(cmd_crit)) {
      ScalarFunction f{parse(expr_text)};
      Interval iv(lo * to_rad, hi * to_rad);
      CriticalOptions opts;
      opts.grid_points = grid;
      CriticalScan scan = find_critical_points(f, iv, opts);
      json points = json::array();
      std::string text;
      for (const CriticalPoint& p : scan.points) {
        points.push_back(json{{"x", p.x * from_rad},
                              {"f", p.f_value},
                              {"kind", to_label(p.kind)},
                              {"test", to_label(p.test_used)},
                              {"residual", p.derivative_residual}});
        text += "x = " + sig6(p.x * from_rad) + "  f = " + sig6(p.f_value) +
                "  " + to_label(p.kind) + "  (" + to_label(p.test_used) +
                " test, |f'| = " + sig6(p.derivative_residual) + ")\n";
      }
      if (scan.points.empty()) text = "no critical points found\n";
      em.report("critical-points",
                json{{"expression", expr_text},
                     {"lo", lo},
                     {"hi", hi},
                     {"grid", grid},
                     {"degrees", degrees}},
                json{{"points", points}}, scan.warnings, text);
      return 0;
    }

    if (app.got_subcommand(cmd_mono)) {
      ScalarFunction f{parse(expr_text)};
      Interval iv(lo * to_rad, hi * to_rad);
      CriticalOptions opts;
      opts.grid_points = grid;
      MonotonicReport report = monotonic_intervals(f, iv, opts);
      json segments = json::array();
      std::string text;
      for (const MonotonicSegment& s : report.segments) {
        segments.push_back(json{{"lo", s.interval.lo * from_rad},
                                {"hi", s.interval.hi * from_rad},
                                {"direction", to_label(s.direction)}});
        text += "[" + sig6(s.interval.lo * from_rad) + ", " +
                sig6(s.interval.hi * from_rad) + "] " + to_label(s.direction) +
                "\n";
      }
      if (report.segments.empty()) text = "no labeled segments\n";
      em.report("monotonic",
                json{{"expression", expr_text},
                     {"lo", lo},
                     {"hi", hi},
                     {"grid", grid},
                     {"degrees", degrees}},
                json{{"segments", segments}}, report.warnings, text);
      return 0;
    }

    if (cmd_model->got_subcommand(cmd_pipe)) {
      PipeSolution s =
          pipe_max_length(PipeModel{pipe_a, pipe_b}, pipe_flags.options());
      json result{{"alpha_star", s.alpha_star},
                  {"alpha_star_deg", s.alpha_star * kRadToDeg},
                  {"length_star", s.length_star},
                  {"iterations", s.details.iterations},
                  {"evaluations", s.details.function_evaluations},
                  {"converged", s.details.converged}};
      std::string text = "alpha* = " + sig6(s.alpha_star) + " rad (" +
                         sig6(s.alpha_star * kRadToDeg) + " deg), L* = " +
                         sig6(s.length_star) + "\n";
      em.report("model pipe",
                json{{"a", pipe_a},
                     {"b", pipe_b},
                     {"tol", pipe_flags.tol},
                     {"max_iterations", pipe_flags.max_iter},
                     {"method", pipe_flags.method}},
                std::move(result), {}, text);
      return s.details.converged ? 0 : 2;
    }

    if (cmd_model->got_subcommand(cmd_cinema)) {
      CinemaSolution s =
          cinema_best_distance(CinemaModel{cin_top, cin_bottom},
                               Interval(cin_lo, cin_hi), cinema_flags.options());
      json result{{"x_star", s.x_star},
                  {"theta_star", s.theta_star},
                  {"theta_star_deg", s.theta_star * kRadToDeg},
                  {"iterations", s.details.iterations},
                  {"evaluations", s.details.function_evaluations},
                  {"converged", s.details.converged}};
      std::string text = "x* = " + sig6(s.x_star) + ", theta* = " +
                         sig6(s.theta_star) + " rad (" +
                         sig6(s.theta_star * kRadToDeg) + " deg)\n";
      em.report("model cinema",
                json{{"top", cin_top},
                     {"bottom", cin_bottom},
                     {"lo", cin_lo},
                     {"hi", cin_hi},
                     {"tol", cinema_flags.tol},
                     {"max_iterations", cinema_flags.max_iter},
                     {"method", cinema_flags.method}},
                std::move(result), s.warnings, text);
      return s.details.converged ? 0 : 2;
    }

    if (app.got_subcommand(cmd_plot)) {
      ScalarFunction f{parse(expr_text)};
      Interval iv(lo * to_rad, hi * to_rad);
      PlotSeries series = sample(f, iv, samples);

      std::vector<PlotMarker> markers;
      std::vector<std::string> warnings;
      auto add_marker = [&](bool maximize) {
        MinimizeResult r =
            maximize ? maximize_bounded(f, iv) : minimize_bounded(f, iv);
        if (!r.converged) warnings.push_back("marker solve did not converge");
        markers.push_back({r.x_min, r.f_min,
                           std::string(maximize ? "max" : "min") + " (" +
                               sig6(r.x_min * from_rad) + ", " + sig6(r.f_min) +
                               ")"});
      };
      if (mark_min) add_marker(false);
      if (mark_max) add_marker(true);

      PlotSeries emitted = series;
      if (degrees) {
        for (PlotSeries::Sample& s : emitted.samples) s.x *= kRadToDeg;
        for (PlotMarker& m : markers) m.x *= kRadToDeg;
      }

      std::string csv = emit_csv(emitted);
      std::string svg;
      if (!out_path.empty()) svg = emit_svg(emitted, width, height, markers);

      if (!csv_path.empty()) {
        std::ofstream file(csv_path, std::ios::binary);
        if (!file) throw Error("cannot write " + csv_path);
        file << csv;
      }
      if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw Error("cannot write " + out_path);
        file << svg;
      }

      json result{{"samples", samples},
                  {"gaps", emitted.gaps().size()},
                  {"csv_path", csv_path},
                  {"svg_path", out_path}};
      std::string text =
          (csv_path.empty() && out_path.empty()) ? csv : std::string();
      em.report("plot",
                json{{"expression", expr_text},
                     {"lo", lo},
                     {"hi", hi},
                     {"samples", samples},
                     {"degrees", degrees},
                     {"width", width},
                     {"height", height}},
                std::move(result), warnings, text);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no subcommand selected\n";
  return 1;
}

}  // namespace unidim::cli
