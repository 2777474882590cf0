#pragma once

#include <string>
#include <vector>

namespace bgossip::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
};

/// Static line plot: one polyline per series, ticked axes and a legend.
/// Non-positive values are dropped on log axes.
std::string render_svg(const PlotSpec& spec, const std::vector<Series>& series);

}  // namespace bgossip::cli
