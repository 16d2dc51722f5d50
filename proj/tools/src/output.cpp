#include "output.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "msqc/version.hpp"

namespace msqc::cli {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

std::string csv_header(const std::string& command_line,
                       const std::string& preset_note) {
  std::string out;
  out += "# msqc ";
  out += kVersion;
  out += "\n# command: ";
  out += command_line;
  out += "\n";
  if (!preset_note.empty()) {
    out += "# preset: ";
    out += preset_note;
    out += "\n";
  }
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open output file: " + tmp.string());
    }
    out << content;
    if (!out.flush()) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into place: " + path);
  }
}

namespace {

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

constexpr int kWidth = 800;
constexpr int kHeight = 500;
constexpr double kLeft = 80.0, kRight = 780.0, kTop = 30.0, kBottom = 450.0;

}  // namespace

std::string render_svg(const std::string& command_line,
                       const std::string& preset_note,
                       const std::string& x_label, const std::string& y_label,
                       const std::vector<SvgSeries>& series,
                       const std::vector<SvgMarker>& markers) {
  double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
  double y_min = x_min, y_max = -x_min;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (!(x_max > x_min)) x_max = x_min + 1.0;
  if (!(y_max > y_min)) y_max = y_min + 1.0;

  const auto px = [&](double x) {
    return kLeft + (kRight - kLeft) * (x - x_min) / (x_max - x_min);
  };
  const auto py = [&](double y) {
    return kBottom - (kBottom - kTop) * (y - y_min) / (y_max - y_min);
  };

  std::string svg;
  svg += "<!-- msqc " + std::string(kVersion) + " -->\n";
  svg += "<!-- command: " + command_line + " -->\n";
  if (!preset_note.empty()) svg += "<!-- preset: " + preset_note + " -->\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) +
         "\" viewBox=\"0 0 " + std::to_string(kWidth) + " " +
         std::to_string(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes.
  svg += "<line x1=\"" + fixed2(kLeft) + "\" y1=\"" + fixed2(kBottom) +
         "\" x2=\"" + fixed2(kRight) + "\" y2=\"" + fixed2(kBottom) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fixed2(kLeft) + "\" y1=\"" + fixed2(kBottom) +
         "\" x2=\"" + fixed2(kLeft) + "\" y2=\"" + fixed2(kTop) +
         "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + fixed2(kLeft) + "\" y=\"470\" font-size=\"12\">" +
         sci(x_min) + "</text>\n";
  svg += "<text x=\"" + fixed2(kRight - 120.0) + "\" y=\"470\" font-size=\"12\">" +
         sci(x_max) + "</text>\n";
  svg += "<text x=\"5\" y=\"" + fixed2(kBottom) + "\" font-size=\"12\">" +
         sci(y_min) + "</text>\n";
  svg += "<text x=\"5\" y=\"" + fixed2(kTop + 4.0) + "\" font-size=\"12\">" +
         sci(y_max) + "</text>\n";
  svg += "<text x=\"400\" y=\"492\" font-size=\"13\" text-anchor=\"middle\">" +
         x_label + "</text>\n";
  svg += "<text x=\"16\" y=\"250\" font-size=\"13\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 16 250)\">" +
         y_label + "</text>\n";

  for (const auto& m : markers) {
    const double x = px(m.x);
    svg += "<line x1=\"" + fixed2(x) + "\" y1=\"" + fixed2(kBottom) +
           "\" x2=\"" + fixed2(x) + "\" y2=\"" + fixed2(kTop) +
           "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
    svg += "<text x=\"" + fixed2(x + 4.0) + "\" y=\"" + fixed2(kTop + 14.0) +
           "\" font-size=\"12\" fill=\"gray\">" + m.label + "</text>\n";
  }

  int legend_row = 0;
  for (const auto& s : series) {
    svg += "<polyline fill=\"none\" stroke=\"" + s.color +
           "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      if (i) svg += ' ';
      svg += fixed2(px(s.points[i].first)) + "," + fixed2(py(s.points[i].second));
    }
    svg += "\"/>\n";
    const double ly = kTop + 16.0 * legend_row++;
    svg += "<line x1=\"620\" y1=\"" + fixed2(ly) + "\" x2=\"650\" y2=\"" +
           fixed2(ly) + "\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"656\" y=\"" + fixed2(ly + 4.0) + "\" font-size=\"12\">" +
           s.label + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace msqc::cli
