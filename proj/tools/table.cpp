#include "table.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <unistd.h>

#include "sqwell/format.hpp"

namespace sqwell::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

struct CsvCell {
  std::string operator()(double v) const { return format_number(v); }
  std::string operator()(long long v) const { return std::to_string(v); }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
  std::string operator()(const std::string& v) const { return csv_field(v); }
};

struct JsonCell {
  std::string operator()(double v) const { return std::isfinite(v) ? format_number(v) : "null"; }
  std::string operator()(long long v) const { return std::to_string(v); }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
  std::string operator()(const std::string& v) const { return json_string(v); }
};

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(table.columns[i]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  out << "{\"columns\":[";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << json_string(table.columns[i]);
  }
  out << "],\"rows\":[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n" : "\n") << '[';
    const auto& row = table.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << std::visit(JsonCell{}, row[i]);
    }
    out << ']';
  }
  out << "\n]}\n";
}

void write_table(std::ostream& out, const Table& table, Format format) {
  if (format == Format::Csv) {
    write_csv(out, table);
  } else {
    write_json(out, table);
  }
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string());
    f << content;
    f.flush();
    if (!f) {
      f.close();
      fs::remove(tmp);
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

}  // namespace sqwell::cli
