#include "gfdm/dense.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>

#include <lapacke.h>

#include <Eigen/LU>
#include <unsupported/Eigen/KroneckerProduct>

namespace gfdm::dense {

Eigen::VectorXd singular_values(const CMatrix& a) {
  // LAPACK's bidiagonal QR keeps tiny singular values accurate in absolute
  // terms; Eigen 3.4's divide-and-conquer SVD does not on these matrices.
  CMatrix work = a;
  const auto m = static_cast<lapack_int>(a.rows());
  const auto n = static_cast<lapack_int>(a.cols());
  Eigen::VectorXd s(std::min(a.rows(), a.cols()));
  Eigen::VectorXd superb(std::max<Eigen::Index>(1, s.size() - 1));
  const lapack_int info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'N', 'N', m, n,
                                         reinterpret_cast<lapack_complex_double*>(work.data()), m,
                                         s.data(), nullptr, 1, nullptr, 1, superb.data());
  if (info != 0) {
    throw std::runtime_error("zgesvd failed with info=" + std::to_string(info));
  }
  std::sort(s.data(), s.data() + s.size());
  return s;
}

double cond(const CMatrix& a) {
  const Eigen::VectorXd s = singular_values(a);
  return s(s.size() - 1) / s(0);
}

double nef(const CMatrix& a) {
  const double n = static_cast<double>(a.rows());
  const CMatrix inv = a.partialPivLu().inverse();
  return a.squaredNorm() * inv.squaredNorm() / (n * n);
}

double sir_metric(const CMatrix& a, double filter_energy) {
  const double n = static_cast<double>(a.rows());
  const CMatrix gram = a.adjoint() * a / filter_energy;
  return (gram - CMatrix::Identity(a.rows(), a.cols())).squaredNorm() / n;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

} // namespace gfdm::dense
