#pragma once

#include <string>
#include <vector>

namespace msqc::cli {

/// Scientific notation with 12 significant digits; the on-disk number format
/// for every emitted file (golden tests compare bytes).
std::string sci(double v);

/// '#'-comment provenance header: tool version, reconstructed command line,
/// preset name when one was used.
std::string csv_header(const std::string& command_line,
                       const std::string& preset_note);

/// Writes via a temporary file and rename so failures never leave a partial
/// file at `path`.
void write_atomic(const std::string& path, const std::string& content);

/// Minimal deterministic SVG line plot: fixed 800x500 canvas, linear axes.
struct SvgSeries {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

struct SvgMarker {
  double x = 0.0;
  std::string label;
};

std::string render_svg(const std::string& command_line,
                       const std::string& preset_note,
                       const std::string& x_label, const std::string& y_label,
                       const std::vector<SvgSeries>& series,
                       const std::vector<SvgMarker>& markers);

}  // namespace msqc::cli
