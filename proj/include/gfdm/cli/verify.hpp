#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gfdm/cli/config.hpp"

namespace gfdm::cli {

struct VerifyOptions {
  bool quick = false; ///< restrict to K, M <= 8
  Fault fault = Fault::None;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst_error = 0.0;
  double tolerance = 0.0;
  std::size_t cases = 0;
  std::string detail;
};

/// Cross-module oracle suite: dense vs factorized A, SVD vs Zak spectrum,
/// closed-form vs numeric condition number, lambda <-> 1-lambda symmetry,
/// block-circulant reconstruction, fast modulator and ZF round trip.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

void print_verification(std::ostream& os, const std::vector<CheckResult>& results);

} // namespace gfdm::cli
