#pragma once

#include <string>
#include <vector>

namespace sobolev::tools {

struct Series {
  std::string label;
  std::string color;
  std::vector<double> x;
  std::vector<double> y;
};

struct Panel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

/// Standalone SVG with panels side by side; y axes are log10.
std::string render_log_plot(const std::vector<Panel>& panels, int panel_width = 420, int height = 320);

} // namespace sobolev::tools
