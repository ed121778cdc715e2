#include "gfdm/cli/table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "gfdm/types.hpp"

namespace gfdm::cli {

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw DimensionError("table row has " + std::to_string(row.size()) + " cells, expected " +
                         std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::size_t ResultTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) {
      return i;
    }
  }
  throw std::out_of_range("no column named '" + name + "'");
}

std::string format_number(double v) {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    return format_number(*d);
  }
  if (const auto* i = std::get_if<long long>(&c)) {
    return std::to_string(*i);
  }
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') {
      quoted += '"';
    }
    quoted += ch == '\n' ? ' ' : ch;
  }
  return quoted + "\"";
}

void ResultTable::write_csv(std::ostream& os) const {
  os << "# " << metadata.dump() << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) {
    os << (i ? "," : "") << columns[i];
  }
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << format_cell(row[i]);
    }
    os << '\n';
  }
}

} // namespace gfdm::cli
