#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace qpswf::cli {

// Shortest text that reads back to the same double; "nan" / "inf" otherwise.
std::string fmt(double x);

void write_text_file(const std::filesystem::path& path, const std::string& text);

struct Series {
  enum class Style { Line, Points };
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  Style style = Style::Line;
  std::string color = "#1f77b4";
};

// Small fixed-size SVG chart with axes, ticks and a legend.
struct SvgPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  // Axis limits; equal bounds mean "fit the data".
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  std::vector<Series> series;

  std::string render() const;
};

}  // namespace qpswf::cli
