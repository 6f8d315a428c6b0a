#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "gee/errors.hpp"

namespace gee::plot {

namespace {

constexpr double width = 640, height = 420;
constexpr double left = 80, right = 30, top = 40, bottom = 60;
constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const line_chart& chart) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = 0.0, ymax = -std::numeric_limits<double>::infinity();
  for (const series& s : chart.lines) {
    for (double x : s.x) xmin = std::min(xmin, x), xmax = std::max(xmax, x);
    for (double y : s.y) ymin = std::min(ymin, y), ymax = std::max(ymax, y);
  }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1;
  if (!std::isfinite(ymax)) ymax = 1;
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  ymax *= 1.05;

  const double pw = width - left - right, ph = height - top - bottom;
  auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
  auto sy = [&](double y) { return top + ph - (y - ymin) / (ymax - ymin) * ph; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt(width / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
         escape(chart.title) + "</text>\n";

  // Axes and ticks.
  svg += "<line x1=\"" + fmt(left) + "\" y1=\"" + fmt(top + ph) + "\" x2=\"" + fmt(left + pw) +
         "\" y2=\"" + fmt(top + ph) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt(left) + "\" y1=\"" + fmt(top) + "\" x2=\"" + fmt(left) + "\" y2=\"" +
         fmt(top + ph) + "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 5; ++t) {
    const double xv = xmin + (xmax - xmin) * t / 5.0;
    const double yv = ymin + (ymax - ymin) * t / 5.0;
    svg += "<text x=\"" + fmt(sx(xv)) + "\" y=\"" + fmt(top + ph + 18) +
           "\" text-anchor=\"middle\">" + fmt(xv) + "</text>\n";
    svg += "<text x=\"" + fmt(left - 6) + "\" y=\"" + fmt(sy(yv) + 4) + "\" text-anchor=\"end\">" +
           fmt(yv) + "</text>\n";
    svg += "<line x1=\"" + fmt(left) + "\" y1=\"" + fmt(sy(yv)) + "\" x2=\"" + fmt(left + pw) +
           "\" y2=\"" + fmt(sy(yv)) + "\" stroke=\"#ddd\"/>\n";
  }
  svg += "<text x=\"" + fmt(left + pw / 2) + "\" y=\"" + fmt(height - 15) +
         "\" text-anchor=\"middle\">" + escape(chart.x_label) + "</text>\n";
  svg += "<text transform=\"translate(18," + fmt(top + ph / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">" + escape(chart.y_label) + "</text>\n";

  for (std::size_t i = 0; i < chart.lines.size(); ++i) {
    const series& s = chart.lines[i];
    const std::string color = palette[i % std::size(palette)];
    std::string points;
    for (std::size_t j = 0; j < std::min(s.x.size(), s.y.size()); ++j) {
      points += fmt(sx(s.x[j])) + "," + fmt(sy(s.y[j])) + " ";
      svg += "<circle cx=\"" + fmt(sx(s.x[j])) + "\" cy=\"" + fmt(sy(s.y[j])) +
             "\" r=\"3.5\" fill=\"" + color + "\"/>\n";
    }
    svg += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\" points=\"" + points +
           "\"/>\n";
    svg += "<text x=\"" + fmt(left + 10) + "\" y=\"" + fmt(top + 16 + 16 * i) + "\" fill=\"" + color +
           "\">" + escape(s.label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void write_svg(const line_chart& chart, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
  out << render_svg(chart);
  if (!out) throw io_error("write failed on '" + path.string() + "'");
}

}  // namespace gee::plot
