#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "cli_error.hpp"

namespace qpswf::cli {

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError(kConfigError, "output_write", "cannot write " + path.string());
  out << text;
  if (!out) throw CliError(kConfigError, "output_write", "failed writing " + path.string());
}

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 180.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 56.0;

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

std::string SvgPlot::render() const {
  auto ty = [&](double y) { return log_y ? std::log10(y) : y; };
  auto usable = [&](double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && (!log_y || y > 0.0);
  };

  double x0 = x_min, x1 = x_max, y0 = log_y && y_min > 0 ? std::log10(y_min) : y_min,
         y1 = log_y && y_max > 0 ? std::log10(y_max) : y_max;
  const bool fit_x = !(x1 > x0);
  const bool fit_y = !(y1 > y0);
  if (fit_x) {
    x0 = std::numeric_limits<double>::infinity();
    x1 = -x0;
  }
  if (fit_y) {
    y0 = std::numeric_limits<double>::infinity();
    y1 = -y0;
  }
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!usable(s.x[i], s.y[i])) continue;
      if (fit_x) {
        x0 = std::min(x0, s.x[i]);
        x1 = std::max(x1, s.x[i]);
      }
      if (fit_y) {
        y0 = std::min(y0, ty(s.y[i]));
        y1 = std::max(y1, ty(s.y[i]));
      }
    }
  }
  if (!std::isfinite(x0) || !std::isfinite(x1)) {
    x0 = 0.0;
    x1 = 1.0;
  }
  if (!std::isfinite(y0) || !std::isfinite(y1)) {
    y0 = 0.0;
    y1 = 1.0;
  }
  if (x1 <= x0) x1 = x0 + 1.0;
  if (y1 <= y0) y1 = y0 + 1.0;
  if (log_y && fit_y) {
    y0 = std::floor(y0);
    y1 = std::ceil(y1);
    if (y1 <= y0) y1 = y0 + 1.0;
  }

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return kTop + ph - (ty(y) - y0) / (y1 - y0) * ph; };
  auto py_raw = [&](double t) { return kTop + ph - (t - y0) / (y1 - y0) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
     << escape(title) << "</text>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  const int nticks = 5;
  for (int t = 0; t <= nticks; ++t) {
    const double xv = x0 + (x1 - x0) * t / nticks;
    const double X = px(xv);
    os << "<line x1=\"" << X << "\" y1=\"" << kTop + ph << "\" x2=\"" << X << "\" y2=\""
       << kTop + ph + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << X << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">" << num(xv)
       << "</text>\n";
  }
  if (log_y) {
    const int step = std::max(1, static_cast<int>(std::ceil((y1 - y0) / 8.0)));
    for (double t = y0; t <= y1 + 1e-9; t += step) {
      const double Y = py_raw(t);
      os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << Y << "\" x2=\"" << kLeft << "\" y2=\"" << Y
         << "\" stroke=\"black\"/>\n";
      os << "<text x=\"" << kLeft - 8 << "\" y=\"" << Y + 4 << "\" text-anchor=\"end\">1e"
         << static_cast<int>(std::lround(t)) << "</text>\n";
    }
  } else {
    for (int t = 0; t <= nticks; ++t) {
      const double yv = y0 + (y1 - y0) * t / nticks;
      const double Y = py_raw(yv);
      os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << Y << "\" x2=\"" << kLeft << "\" y2=\"" << Y
         << "\" stroke=\"black\"/>\n";
      os << "<text x=\"" << kLeft - 8 << "\" y=\"" << Y + 4 << "\" text-anchor=\"end\">" << num(yv)
         << "</text>\n";
    }
  }
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">"
     << escape(x_label) << "</text>\n";
  os << "<text x=\"18\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
     << kTop + ph / 2 << ")\">" << escape(y_label) << "</text>\n";

  double legend_y = kTop + 10;
  for (const auto& s : series) {
    if (s.style == Series::Style::Line) {
      os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.8\" points=\"";
      for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
        if (usable(s.x[i], s.y[i])) os << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
      }
      os << "\"/>\n";
    } else {
      for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
        if (!usable(s.x[i], s.y[i])) continue;
        os << "<circle cx=\"" << px(s.x[i]) << "\" cy=\"" << py(s.y[i]) << "\" r=\"3\" fill=\""
           << s.color << "\"/>\n";
      }
    }
    const double lx = kWidth - kRight + 14;
    if (s.style == Series::Style::Line) {
      os << "<line x1=\"" << lx << "\" y1=\"" << legend_y << "\" x2=\"" << lx + 20 << "\" y2=\""
         << legend_y << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
    } else {
      os << "<circle cx=\"" << lx + 10 << "\" cy=\"" << legend_y << "\" r=\"3\" fill=\"" << s.color
         << "\"/>\n";
    }
    os << "<text x=\"" << lx + 26 << "\" y=\"" << legend_y + 4 << "\">" << escape(s.name) << "</text>\n";
    legend_y += 18;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace qpswf::cli
