#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace sqwell::cli {

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

/// Both writers format numbers through format_number, so a value has the same
/// digits in either encoding. JSON maps non-finite numbers to null.
void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);
void write_table(std::ostream& out, const Table& table, Format format);

/// Writes to a sibling temporary file and renames it over `path`, so readers
/// never see a partial file.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace sqwell::cli
