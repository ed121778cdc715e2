#pragma once

#include <string>

#include "gfdm/types.hpp"

namespace gfdm::cli {

// Symbol and sample files. Text: one complex value per line as "re im".
// Binary: consecutive little-endian float64 (re, im) pairs.

CVector read_complex_file(const std::string& path, bool binary);
void write_complex_file(const std::string& path, const CVector& values, bool binary);

CVector read_complex_text(std::istream& is);
void write_complex_text(std::ostream& os, const CVector& values);

} // namespace gfdm::cli
