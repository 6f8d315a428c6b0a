#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace gee::plot {

struct series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct line_chart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<series> lines;
};

/// Renders a minimal standalone SVG line chart with markers and axis ticks.
std::string render_svg(const line_chart& chart);

void write_svg(const line_chart& chart, const std::filesystem::path& path);

}  // namespace gee::plot
