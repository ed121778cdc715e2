#include "gfdm/cli/symbol_io.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "gfdm/cli/table.hpp"

namespace gfdm::cli {

namespace {

std::uint64_t to_little_endian(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::big) {
    std::uint64_t r = 0;
    for (int i = 0; i < 8; ++i) {
      r = (r << 8) | ((v >> (8 * i)) & 0xffu);
    }
    return r;
  }
  return v;
}

bool parse_double(const std::string& token, double& value) {
  char* end = nullptr;
  value = std::strtod(token.c_str(), &end);
  return end == token.c_str() + token.size();
}

} // namespace

CVector read_complex_text(std::istream& is) {
  CVector out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    // strtod rather than operator>> so the "inf"/"nan" spellings written by
    // format_number read back.
    std::istringstream ls(line);
    std::string tok_re;
    std::string tok_im;
    std::string extra;
    double re = 0.0;
    double im = 0.0;
    if (!(ls >> tok_re >> tok_im) || (ls >> extra) || !parse_double(tok_re, re) ||
        !parse_double(tok_im, im)) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 're im', got '" + line +
                        "'");
    }
    out.emplace_back(re, im);
  }
  return out;
}

void write_complex_text(std::ostream& os, const CVector& values) {
  for (const auto& v : values) {
    os << format_number(v.real()) << ' ' << format_number(v.imag()) << '\n';
  }
}

CVector read_complex_file(const std::string& path, bool binary) {
  std::ifstream is(path, binary ? std::ios::binary : std::ios::in);
  if (!is) {
    throw ConfigError("cannot open input file '" + path + "'");
  }
  if (!binary) {
    return read_complex_text(is);
  }
  std::vector<char> bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  if (bytes.size() % 16 != 0) {
    throw DimensionError("binary file '" + path + "' is not a whole number of complex float64 pairs");
  }
  CVector out(bytes.size() / 16);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t raw[2];
    std::memcpy(raw, bytes.data() + 16 * i, 16);
    const double re = std::bit_cast<double>(to_little_endian(raw[0]));
    const double im = std::bit_cast<double>(to_little_endian(raw[1]));
    out[i] = {re, im};
  }
  return out;
}

void write_complex_file(const std::string& path, const CVector& values, bool binary) {
  std::ofstream os(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
  if (!os) {
    throw ConfigError("cannot open output file '" + path + "'");
  }
  if (!binary) {
    write_complex_text(os, values);
    return;
  }
  for (const auto& v : values) {
    const std::uint64_t raw[2] = {to_little_endian(std::bit_cast<std::uint64_t>(v.real())),
                                  to_little_endian(std::bit_cast<std::uint64_t>(v.imag()))};
    os.write(reinterpret_cast<const char*>(raw), 16);
  }
}

} // namespace gfdm::cli
