#include "eitengine_cli/table.hpp"

#include <cmath>
#include <cstdio>

#include "eitengine/errors.hpp"
#include "json.hpp"

namespace eitengine_cli {

void ResultTable::add_meta(const std::string& key, const std::string& value) {
  metadata.emplace_back(key, value);
}

void ResultTable::add_meta(const std::string& key, double value) {
  metadata.emplace_back(key, format_double(value));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

// Values are simple labels today; quoting keeps the writer safe if that
// ever changes.
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(parts[i]);
  }
  return out;
}

}  // namespace

void write_csv(const ResultTable& table, std::ostream& out) {
  out << "# command: " << table.command << '\n';
  for (const auto& [key, value] : table.metadata) {
    out << "# " << key << ": " << value << '\n';
  }
  out << "# units: " << join(table.units) << '\n';
  out << join(table.columns) << '\n';
  for (const auto& row : table.rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += ',';
      if (const double* d = std::get_if<double>(&row[i])) {
        line += format_double(*d);
      } else {
        line += csv_escape(std::get<std::string>(row[i]));
      }
    }
    out << line << '\n';
  }
}

void write_json(const ResultTable& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["command"] = table.command;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata) {
    meta[key] = value;
  }
  doc["metadata"] = std::move(meta);
  doc["columns"] = table.columns;
  doc["units"] = table.units;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (const auto& cell : row) {
      if (const double* d = std::get_if<double>(&cell)) {
        jrow.push_back(*d);  // non-finite values serialize as null
      } else {
        jrow.push_back(std::get<std::string>(cell));
      }
    }
    rows.push_back(std::move(jrow));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void write_table(const ResultTable& table, OutputFormat format,
                 std::ostream& out) {
  if (format == OutputFormat::kCsv) {
    write_csv(table, out);
  } else {
    write_json(table, out);
  }
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw eitengine::DomainError("unknown output format: " + name +
                               " (expected csv or json)");
}

}  // namespace eitengine_cli
