#include "sobolev_tools/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace sobolev::tools {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
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

} // namespace

std::string render_log_plot(const std::vector<Panel>& panels, int panel_width, int height) {
  const double ml = 60, mr = 15, mt = 30, mb = 45;
  const int width = panel_width * static_cast<int>(std::max<std::size_t>(panels.size(), 1));
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
                    "\" height=\"" + std::to_string(height) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t p = 0; p < panels.size(); ++p) {
    const Panel& panel = panels[p];
    const double x0 = static_cast<double>(p) * panel_width;
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : panel.series) {
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!(s.y[i] > 0.0)) continue;
        xmin = std::min(xmin, s.x[i]);
        xmax = std::max(xmax, s.x[i]);
        ymin = std::min(ymin, std::log10(s.y[i]));
        ymax = std::max(ymax, std::log10(s.y[i]));
      }
    }
    if (!std::isfinite(xmin)) { xmin = 0; xmax = 1; ymin = 0; ymax = 1; }
    ymin = std::floor(ymin);
    ymax = std::ceil(ymax);
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    const double pw = panel_width - ml - mr, ph = height - mt - mb;
    auto sx = [&](double x) { return x0 + ml + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double ly) { return mt + (ymax - ly) / (ymax - ymin) * ph; };

    svg += "<rect x=\"" + fmt("%.1f", x0 + ml) + "\" y=\"" + fmt("%.1f", mt) + "\" width=\"" + fmt("%.1f", pw) +
           "\" height=\"" + fmt("%.1f", ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
    const int ystep = std::max(1, static_cast<int>(std::ceil((ymax - ymin) / 8)));
    for (int e = static_cast<int>(ymin); e <= static_cast<int>(ymax); e += ystep) {
      const double y = sy(e);
      svg += "<line x1=\"" + fmt("%.1f", x0 + ml) + "\" x2=\"" + fmt("%.1f", x0 + ml + pw) + "\" y1=\"" +
             fmt("%.1f", y) + "\" y2=\"" + fmt("%.1f", y) + "\" stroke=\"#ddd\"/>\n";
      svg += "<text x=\"" + fmt("%.1f", x0 + ml - 5) + "\" y=\"" + fmt("%.1f", y + 4) +
             "\" text-anchor=\"end\">1e" + std::to_string(e) + "</text>\n";
    }
    for (int t = 0; t <= 4; ++t) {
      const double xv = xmin + (xmax - xmin) * t / 4.0;
      svg += "<text x=\"" + fmt("%.1f", sx(xv)) + "\" y=\"" + fmt("%.1f", mt + ph + 15) +
             "\" text-anchor=\"middle\">" + fmt("%g", xv) + "</text>\n";
    }
    svg += "<text x=\"" + fmt("%.1f", x0 + ml + pw / 2) + "\" y=\"18\" text-anchor=\"middle\" font-size=\"13\">" +
           escape(panel.title) + "</text>\n";
    svg += "<text x=\"" + fmt("%.1f", x0 + ml + pw / 2) + "\" y=\"" + fmt("%.1f", height - 8.0) +
           "\" text-anchor=\"middle\">" + escape(panel.x_label) + "</text>\n";
    svg += "<text transform=\"translate(" + fmt("%.1f", x0 + 12) + "," + fmt("%.1f", mt + ph / 2) +
           ") rotate(-90)\" text-anchor=\"middle\">" + escape(panel.y_label) + "</text>\n";

    double legend_y = mt + 14;
    for (const auto& s : panel.series) {
      std::string pts;
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!(s.y[i] > 0.0)) continue;
        pts += fmt("%.2f", sx(s.x[i])) + "," + fmt("%.2f", sy(std::log10(s.y[i]))) + " ";
      }
      svg += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
      const double lx = x0 + ml + pw - 110;
      svg += "<line x1=\"" + fmt("%.1f", lx) + "\" x2=\"" + fmt("%.1f", lx + 20) + "\" y1=\"" +
             fmt("%.1f", legend_y - 4) + "\" y2=\"" + fmt("%.1f", legend_y - 4) + "\" stroke=\"" + s.color +
             "\" stroke-width=\"1.5\"/>\n";
      svg += "<text x=\"" + fmt("%.1f", lx + 25) + "\" y=\"" + fmt("%.1f", legend_y) + "\">" + escape(s.label) +
             "</text>\n";
      legend_y += 14;
    }
  }
  svg += "</svg>\n";
  return svg;
}

} // namespace sobolev::tools
