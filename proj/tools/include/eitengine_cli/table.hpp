#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace eitengine_cli {

// One output cell: a number or a short label ("below", "eit", ...).
using Cell = std::variant<double, std::string>;

enum class OutputFormat { kCsv, kJson };

// Column-oriented result container every command renders into. Rendering is
// deterministic: fixed key order, fixed float formatting, no timestamps.
struct ResultTable {
  std::string command;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::string> units;  // parallel to columns
  std::vector<std::vector<Cell>> rows;

  void add_meta(const std::string& key, const std::string& value);
  void add_meta(const std::string& key, double value);
};

// 17 significant digits, enough to round-trip any double; C locale.
std::string format_double(double v);

// '#'-prefixed metadata and units lines, then a header row, then data rows.
// Non-finite numbers appear as nan/inf literals.
void write_csv(const ResultTable& table, std::ostream& out);

// Single ordered object: command, metadata, columns, units, rows.
// Non-finite numbers become null.
void write_json(const ResultTable& table, std::ostream& out);

void write_table(const ResultTable& table, OutputFormat format,
                 std::ostream& out);

OutputFormat parse_format(const std::string& name);  // "csv" | "json"

}  // namespace eitengine_cli
