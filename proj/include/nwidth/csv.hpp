// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace nwidth {

/// Shortest decimal string that parses back to the same double.
std::string format_number(double v);

/// Comma-separated table with a mandatory header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  /// Index of a named column; throws UsageError naming the column if absent.
  std::size_t column_index(const std::string& name) const;
  std::vector<double> numeric_column(const std::string& name) const;
};

std::string to_csv_string(const CsvTable& t);
void write_csv(const std::filesystem::path& path, const CsvTable& t);
CsvTable read_csv(const std::filesystem::path& path);
CsvTable parse_csv(const std::string& text);

}  // namespace nwidth
