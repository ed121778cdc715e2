#pragma once

// Dense-matrix reference computations used to cross-check the structured
// paths. Everything here is O(N^3).

#include "gfdm/types.hpp"

namespace gfdm::dense {

/// Singular values in ascending order.
Eigen::VectorXd singular_values(const CMatrix& a);

/// sigma_max / sigma_min from a numeric SVD.
double cond(const CMatrix& a);

/// (1/N^2) ||A||_F^2 ||A^{-1}||_F^2 with an explicit LU inverse.
double nef(const CMatrix& a);

/// (1/N) || A^H A / ||g||^2 - I ||_F^2.
double sir_metric(const CMatrix& a, double filter_energy);

/// Kronecker product a (x) b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

} // namespace gfdm::dense
