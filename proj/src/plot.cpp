#include "centropy/plot.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include <fmt/format.h>

#include "centropy/errors.hpp"
#include "centropy/stats.hpp"
#include "text_util.hpp"

namespace centropy {
namespace {

constexpr double kPanelWidth = 720.0;
constexpr double kPanelHeight = 520.0;

struct Point {
  std::string name;
  double x = 0.0;
  double y = 0.0;
};

std::vector<Point> collect_points(const BenchmarkTable& table, std::string_view benchmark) {
  std::vector<Point> points;
  for (const SystemRecord& record : table.records) {
    const auto it = record.benchmarks.find(std::string(benchmark));
    if (it == record.benchmarks.end()) continue;
    points.push_back({record.name, record.entropy, it->second});
  }
  return points;
}

std::string_view resolve_benchmark(std::string_view benchmark) {
  const auto canonical = canonical_benchmark(benchmark);
  if (!canonical) throw UnknownBenchmark(fmt::format("unknown benchmark \"{}\"", benchmark));
  return *canonical;
}

std::string escape_xml(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

double nice_num(double x, bool round_result) {
  const int exponent = static_cast<int>(std::floor(std::log10(x)));
  const double fraction = x / std::pow(10.0, exponent);
  double nice;
  if (round_result) {
    nice = fraction < 1.5 ? 1.0 : fraction < 3.0 ? 2.0 : fraction < 7.0 ? 5.0 : 10.0;
  } else {
    nice = fraction <= 1.0 ? 1.0 : fraction <= 2.0 ? 2.0 : fraction <= 5.0 ? 5.0 : 10.0;
  }
  return nice * std::pow(10.0, exponent);
}

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> ticks;
};

Axis nice_axis(double min_value, double max_value) {
  if (min_value == max_value) {
    const double pad = std::max(1.0, std::fabs(min_value) * 0.1);
    min_value -= pad;
    max_value += pad;
  }
  Axis axis;
  const double range = nice_num(max_value - min_value, false);
  const double step = nice_num(range / 4.0, true);
  axis.lo = std::floor(min_value / step) * step;
  axis.hi = std::ceil(max_value / step) * step;
  for (double tick = axis.lo; tick <= axis.hi + step * 0.5; tick += step) {
    // Snap near-zero ticks so labels do not read "-0".
    axis.ticks.push_back(std::fabs(tick) < step * 1e-9 ? 0.0 : tick);
  }
  return axis;
}

struct Fit {
  double slope = 0.0;
  double intercept = 0.0;
};

std::optional<Fit> least_squares(const std::vector<Point>& points) {
  if (points.size() < 2) return std::nullopt;
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const Point& p : points) {
    mean_x += p.x;
    mean_y += p.y;
  }
  mean_x /= static_cast<double>(points.size());
  mean_y /= static_cast<double>(points.size());
  double sxx = 0.0;
  double sxy = 0.0;
  for (const Point& p : points) {
    sxx += (p.x - mean_x) * (p.x - mean_x);
    sxy += (p.x - mean_x) * (p.y - mean_y);
  }
  if (sxx == 0.0) return std::nullopt;
  const double slope = sxy / sxx;
  return Fit{slope, mean_y - slope * mean_x};
}

std::optional<double> sample_r(const std::vector<Point>& points) {
  if (points.size() < 3) return std::nullopt;
  SampleSeries x{"x", {}};
  SampleSeries y{"y", {}};
  for (const Point& p : points) {
    x.values.push_back(p.x);
    y.values.push_back(p.y);
  }
  try {
    return pearson_r(x, y);
  } catch (const DegenerateSeries&) {
    return std::nullopt;
  }
}

// One kPanelWidth x kPanelHeight scatter panel with its top-left at (ox, oy).
void render_panel(std::string& svg, const BenchmarkTable& table, std::string_view name,
                  double ox, double oy) {
  const std::vector<Point> points = collect_points(table, name);

  constexpr double left = 78.0;
  constexpr double right = 24.0;
  constexpr double top = 56.0;
  constexpr double bottom = 64.0;
  const double plot_w = kPanelWidth - left - right;
  const double plot_h = kPanelHeight - top - bottom;

  auto minmax_x = std::minmax_element(points.begin(), points.end(),
                                      [](const Point& a, const Point& b) { return a.x < b.x; });
  auto minmax_y = std::minmax_element(points.begin(), points.end(),
                                      [](const Point& a, const Point& b) { return a.y < b.y; });
  const Axis ax = nice_axis(minmax_x.first->x, minmax_x.second->x);
  const Axis ay = nice_axis(minmax_y.first->y, minmax_y.second->y);

  auto px = [&](double x) { return ox + left + (x - ax.lo) / (ax.hi - ax.lo) * plot_w; };
  auto py = [&](double y) { return oy + top + plot_h - (y - ay.lo) / (ay.hi - ay.lo) * plot_h; };

  const auto r = sample_r(points);
  std::string title = fmt::format("Entropy vs {}", name);
  if (r) title += fmt::format(" (r = {:.4f}, n = {})", *r, points.size());
  svg += fmt::format(
      "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"17\" "
      "text-anchor=\"middle\">{}</text>\n",
      ox + kPanelWidth / 2.0, oy + 30.0, escape_xml(title));

  // grid + ticks
  for (double tick : ax.ticks) {
    const double x = px(tick);
    svg += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"#dddddd\" "
        "stroke-width=\"1\"/>\n",
        x, oy + top, oy + top + plot_h);
    svg += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"12\" "
        "text-anchor=\"middle\">{:.6g}</text>\n",
        x, oy + top + plot_h + 20.0, tick);
  }
  for (double tick : ay.ticks) {
    const double y = py(tick);
    svg += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"#dddddd\" "
        "stroke-width=\"1\"/>\n",
        ox + left, y, ox + left + plot_w);
    svg += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"12\" "
        "text-anchor=\"end\">{:.6g}</text>\n",
        ox + left - 8.0, y + 4.0, tick);
  }
  svg += fmt::format(
      "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" "
      "stroke=\"#333333\" stroke-width=\"1\"/>\n",
      ox + left, oy + top, plot_w, plot_h);

  // axis captions
  svg += fmt::format(
      "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"14\" "
      "text-anchor=\"middle\">Entropy (dimensionless)</text>\n",
      ox + left + plot_w / 2.0, oy + kPanelHeight - 16.0);
  svg += fmt::format(
      "<text x=\"{0:.2f}\" y=\"{1:.2f}\" font-family=\"sans-serif\" font-size=\"14\" "
      "text-anchor=\"middle\" transform=\"rotate(-90 {0:.2f} {1:.2f})\">{2}</text>\n",
      ox + 22.0, oy + top + plot_h / 2.0,
      escape_xml(fmt::format("{} ({})", name, benchmark_unit(name))));

  // least-squares line, clipped to the plot box
  if (const auto fit = least_squares(points)) {
    auto y_at = [&](double x) { return fit->slope * x + fit->intercept; };
    double x1 = ax.lo;
    double x2 = ax.hi;
    if (fit->slope != 0.0) {
      double t1 = (ay.lo - fit->intercept) / fit->slope;
      double t2 = (ay.hi - fit->intercept) / fit->slope;
      if (t1 > t2) std::swap(t1, t2);
      x1 = std::max(x1, t1);
      x2 = std::min(x2, t2);
    }
    if (x1 < x2 && y_at(x1) >= ay.lo - 1e-9 && y_at(x1) <= ay.hi + 1e-9) {
      svg += fmt::format(
          "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#d62728\" "
          "stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n",
          px(x1), py(y_at(x1)), px(x2), py(y_at(x2)));
    }
  }

  for (const Point& p : points) {
    svg += fmt::format(
        "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"4.5\" fill=\"#1f77b4\" "
        "fill-opacity=\"0.85\"/>\n",
        px(p.x), py(p.y));
    svg += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\" "
        "fill=\"#444444\">{}</text>\n",
        px(p.x) + 7.0, py(p.y) + 4.0, escape_xml(p.name));
  }
}

std::string svg_header(double width, double height) {
  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
      "viewBox=\"0 0 {0:.0f} {1:.0f}\">\n",
      width, height);
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return svg;
}

}  // namespace

std::string scatter_svg(const BenchmarkTable& table, std::string_view benchmark) {
  const std::string_view name = resolve_benchmark(benchmark);
  if (collect_points(table, name).empty())
    throw InsufficientData(fmt::format("no system in {} has a {} value", table.source, name));

  std::string svg = svg_header(kPanelWidth, kPanelHeight);
  render_panel(svg, table, name, 0.0, 0.0);
  svg += "</svg>\n";
  return svg;
}

std::string scatter_grid_svg(const BenchmarkTable& table) {
  std::vector<std::string_view> present;
  for (const BenchmarkInfo& info : kBenchmarks) {
    if (!collect_points(table, info.name).empty()) present.push_back(info.name);
  }
  if (present.empty())
    throw InsufficientData(fmt::format("no system in {} has any benchmark value", table.source));

  constexpr std::size_t columns = 2;
  const std::size_t rows = (present.size() + columns - 1) / columns;
  std::string svg = svg_header(columns * kPanelWidth, static_cast<double>(rows) * kPanelHeight);
  for (std::size_t i = 0; i < present.size(); ++i) {
    render_panel(svg, table, present[i], static_cast<double>(i % columns) * kPanelWidth,
                 static_cast<double>(i / columns) * kPanelHeight);
  }
  svg += "</svg>\n";
  return svg;
}

std::string scatter_csv(const BenchmarkTable& table, std::string_view benchmark) {
  const std::string_view name = resolve_benchmark(benchmark);
  const std::vector<Point> points = collect_points(table, name);
  std::string out = fmt::format("System,Entropy,{}\n", name);
  for (const Point& p : points) {
    const bool needs_quotes = p.name.find_first_of(",\"\n") != std::string::npos;
    std::string field = p.name;
    if (needs_quotes) {
      std::string quoted = "\"";
      for (char c : field) {
        if (c == '"') quoted.push_back('"');
        quoted.push_back(c);
      }
      quoted.push_back('"');
      field = std::move(quoted);
    }
    out += fmt::format("{},{},{}\n", field, detail::num_to_string(p.x),
                       detail::num_to_string(p.y));
  }
  return out;
}

}  // namespace centropy
