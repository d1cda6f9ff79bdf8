// SPDX-License-Identifier: Apache-2.0
#include "nwidth/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nwidth/errors.hpp"

namespace nwidth {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header.size()) throw UsageError("CSV row width does not match the header");
  rows.push_back(std::move(row));
}

std::size_t CsvTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw UsageError("missing CSV column: " + name);
}

std::vector<double> CsvTable::numeric_column(const std::string& name) const {
  const std::size_t c = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    const std::string& s = r[c];
    if (s == "nan" || s.empty()) {
      out.push_back(std::nan(""));
    } else if (s == "inf" || s == "-inf") {
      out.push_back(s[0] == '-' ? -HUGE_VAL : HUGE_VAL);
    } else {
      double v = 0.0;
      const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw UsageError("non-numeric value '" + s + "' in CSV column " + name);
      out.push_back(v);
    }
  }
  return out;
}

std::string to_csv_string(const CsvTable& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

void write_csv(const std::filesystem::path& path, const CsvTable& t) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open " + path.string() + " for writing");
  f << to_csv_string(t);
  if (!f) throw DomainError("failed writing " + path.string());
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.emplace_back();
    if (first) {
      t.header = std::move(cells);
      first = false;
    } else {
      t.add_row(std::move(cells));
    }
  }
  if (first) throw UsageError("CSV input is empty");
  return t;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_csv(ss.str());
}

}  // namespace nwidth
