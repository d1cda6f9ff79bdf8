// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nwidth/csv.hpp"

namespace nwidth {

struct PlotOptions {
  /// Abscissa column; empty means the first column.
  std::string x_column;
  /// Ordinate columns; empty means every other column.
  std::vector<std::string> y_columns;
  bool loglog = false;
  std::string title;
};

/// Renders one polyline per y column. Points that are not finite (or not
/// positive on log axes) are skipped.
std::string render_svg(const CsvTable& table, const PlotOptions& opts);

/// Reads a CSV and writes an SVG chart. Nothing is written when the CSV is
/// empty or a requested column is missing.
void plot_svg(const std::filesystem::path& csv, const std::filesystem::path& out,
              const PlotOptions& opts);

}  // namespace nwidth
