#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace gfdm::cli {

using Cell = std::variant<double, long long, std::string>;

/// Rectangular result table written as CSV behind a '#'-prefixed JSON
/// metadata line.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::json metadata = nlohmann::json::object();

  void add_row(std::vector<Cell> row);
  std::size_t column_index(const std::string& name) const;

  void write_csv(std::ostream& os) const;
};

/// Shortest round-trip decimal for finite values, "inf"/"-inf"/"nan" otherwise.
std::string format_number(double v);

std::string format_cell(const Cell& c);

} // namespace gfdm::cli
