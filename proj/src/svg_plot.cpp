// SPDX-License-Identifier: Apache-2.0
#include "nwidth/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>

#include "nwidth/errors.hpp"

namespace nwidth {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 160.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 50.0;

constexpr std::array<const char*, 8> kColors{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                             "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

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

std::string render_svg(const CsvTable& table, const PlotOptions& opts) {
  if (table.rows.empty()) throw UsageError("CSV has no data rows to plot");
  const std::string xname = opts.x_column.empty() ? table.header.front() : opts.x_column;
  std::vector<std::string> ynames = opts.y_columns;
  if (ynames.empty()) {
    for (const auto& h : table.header)
      if (h != xname) ynames.push_back(h);
  }
  if (ynames.empty()) throw UsageError("no columns to plot");
  const auto xs = table.numeric_column(xname);
  std::vector<std::vector<double>> ys;
  for (const auto& n : ynames) ys.push_back(table.numeric_column(n));

  auto usable = [&](double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) return false;
    return !opts.loglog || (x > 0.0 && y > 0.0);
  };
  auto tx = [&](double v) { return opts.loglog ? std::log10(v) : v; };

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& col : ys) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!usable(xs[i], col[i])) continue;
      xmin = std::min(xmin, tx(xs[i]));
      xmax = std::max(xmax, tx(xs[i]));
      ymin = std::min(ymin, tx(col[i]));
      ymax = std::max(ymax, tx(col[i]));
    }
  }
  if (!std::isfinite(xmin)) throw UsageError("no plottable points in the selected columns");
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double v) { return kLeft + (tx(v) - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double v) { return kTop + (ymax - tx(v)) / (ymax - ymin) * ph; };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_number(kWidth) +
       "\" height=\"" + format_number(kHeight) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<rect x=\"" + format_number(kLeft) + "\" y=\"" + format_number(kTop) + "\" width=\"" +
       format_number(pw) + "\" height=\"" + format_number(ph) +
       "\" fill=\"none\" stroke=\"black\"/>\n";
  if (!opts.title.empty())
    s += "<text x=\"" + format_number(kLeft) + "\" y=\"20\" font-size=\"14\">" +
         escape(opts.title) + "</text>\n";
  const std::string scale = opts.loglog ? "log10 " : "";
  s += "<text x=\"" + format_number(kLeft + pw / 2) + "\" y=\"" + format_number(kHeight - 12) +
       "\" font-size=\"12\" text-anchor=\"middle\">" + escape(scale + xname) + "</text>\n";
  // Axis range labels.
  s += "<text x=\"" + format_number(kLeft) + "\" y=\"" + format_number(kTop + ph + 16) +
       "\" font-size=\"10\">" + format_number(xmin) + "</text>\n";
  s += "<text x=\"" + format_number(kLeft + pw) + "\" y=\"" + format_number(kTop + ph + 16) +
       "\" font-size=\"10\" text-anchor=\"end\">" + format_number(xmax) + "</text>\n";
  s += "<text x=\"" + format_number(kLeft - 4) + "\" y=\"" + format_number(kTop + 10) +
       "\" font-size=\"10\" text-anchor=\"end\">" + format_number(ymax) + "</text>\n";
  s += "<text x=\"" + format_number(kLeft - 4) + "\" y=\"" + format_number(kTop + ph) +
       "\" font-size=\"10\" text-anchor=\"end\">" + format_number(ymin) + "</text>\n";

  for (std::size_t c = 0; c < ys.size(); ++c) {
    const char* color = kColors[c % kColors.size()];
    std::string pts;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!usable(xs[i], ys[c][i])) continue;
      if (!pts.empty()) pts += ' ';
      pts += format_number(px(xs[i])) + "," + format_number(py(ys[c][i]));
    }
    s += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"" +
         pts + "\"/>\n";
    const double ly = kTop + 14.0 + 16.0 * static_cast<double>(c);
    const double lx = kLeft + pw + 10.0;
    s += "<line x1=\"" + format_number(lx) + "\" y1=\"" + format_number(ly - 4) + "\" x2=\"" +
         format_number(lx + 20) + "\" y2=\"" + format_number(ly - 4) + "\" stroke=\"" + color +
         "\" stroke-width=\"2\"/>\n";
    s += "<text x=\"" + format_number(lx + 26) + "\" y=\"" + format_number(ly) +
         "\" font-size=\"11\">" + escape(ynames[c]) + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

void plot_svg(const std::filesystem::path& csv, const std::filesystem::path& out,
              const PlotOptions& opts) {
  const auto table = read_csv(csv);
  const std::string svg = render_svg(table, opts);
  if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path());
  std::ofstream f(out, std::ios::binary);
  if (!f) throw DomainError("cannot open " + out.string() + " for writing");
  f << svg;
}

}  // namespace nwidth
