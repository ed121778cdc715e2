#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gfdm {

using cplx = std::complex<double>;

/// Flat complex vector (signals, filters, spectra, vectorized grids).
using CVector = std::vector<cplx>;

/// Dense complex matrix. Only materialized by builders and oracle paths.
using CMatrix = Eigen::MatrixXcd;

/// Raised when vector/matrix sizes do not agree with the requested geometry.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for invalid parameters (K, M, lambda, alpha, beta, ...).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace gfdm
