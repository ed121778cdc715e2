#include "gfdm/tensor.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gfdm::tensor {

namespace {

void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw DimensionError(std::string(what) + ": expected length " +
                         std::to_string(want) + ", got " + std::to_string(got));
  }
}

} // namespace

cplx unit_root(long long num, long long den) {
  if (den <= 0) {
    throw ConfigError("unit_root: denominator must be positive");
  }
  const long long r = ((num % den) + den) % den;
  if ((4 * r) % den == 0) {
    switch ((4 * r) / den) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                       static_cast<double>(den);
  return std::polar(1.0, angle);
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

CVector vec(const CMatrix& x) {
  CVector out(static_cast<std::size_t>(x.size()));
  const auto rows = static_cast<std::size_t>(x.rows());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      out[static_cast<std::size_t>(i) + static_cast<std::size_t>(j) * rows] = x(i, j);
    }
  }
  return out;
}

CMatrix unvec(std::span<const cplx> x, std::size_t rows, std::size_t cols) {
  require_size(x.size(), rows * cols, "unvec");
  CMatrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = x[i + j * rows];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

void StridePermutation::apply(std::span<const cplx> x, std::span<cplx> out) const {
  require_size(x.size(), size(), "stride permutation");
  require_size(out.size(), size(), "stride permutation output");
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = 0; j < Q; ++j) {
      out[i * Q + j] = x[j * L + i];
    }
  }
}

CVector StridePermutation::apply(std::span<const cplx> x) const {
  CVector out(size());
  apply(x, out);
  return out;
}

CMatrix StridePermutation::dense() const {
  const auto n = static_cast<Eigen::Index>(size());
  CMatrix p = CMatrix::Zero(n, n);
  for (std::size_t out = 0; out < size(); ++out) {
    p(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(source(out))) = 1.0;
  }
  return p;
}

CVector apply_stride_permutation(std::span<const cplx> x, std::size_t L,
                                 std::size_t Q) {
  return StridePermutation{L, Q}.apply(x);
}

// ---------------------------------------------------------------------------

CMatrix dft_matrix(std::size_t n) {
  if (n == 0) {
    throw ConfigError("dft_matrix: N must be >= 1");
  }
  const auto nn = static_cast<long long>(n);
  CMatrix w(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (long long i = 0; i < nn; ++i) {
    for (long long j = 0; j < nn; ++j) {
      w(i, j) = unit_root(-((i * j) % nn), nn);
    }
  }
  return w;
}

DftPlan::DftPlan(std::size_t n) : n_(n), radix2_(is_power_of_two(n)) {
  if (n == 0) {
    throw ConfigError("DftPlan: N must be >= 1");
  }
  roots_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    roots_[i] = unit_root(-static_cast<long long>(i), static_cast<long long>(n));
  }
  if (radix2_) {
    bitrev_.resize(n);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) {
      ++bits;
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < bits; ++b) {
        r |= ((i >> b) & 1u) << (bits - 1 - b);
      }
      bitrev_[i] = r;
    }
  }
}

void DftPlan::forward(std::span<cplx> x) const {
  require_size(x.size(), n_, "DftPlan::forward");
  radix2_ ? radix2_pass(x, false) : direct_pass(x, false);
}

void DftPlan::backward(std::span<cplx> x) const {
  require_size(x.size(), n_, "DftPlan::backward");
  radix2_ ? radix2_pass(x, true) : direct_pass(x, true);
}

void DftPlan::radix2_pass(std::span<cplx> x, bool inverse) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (i < bitrev_[i]) {
      std::swap(x[i], x[bitrev_[i]]);
    }
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const cplx w = inverse ? std::conj(roots_[k * stride]) : roots_[k * stride];
        const cplx a = x[start + k];
        const cplx b = x[start + k + half] * w;
        x[start + k] = a + b;
        x[start + k + half] = a - b;
      }
    }
  }
}

void DftPlan::direct_pass(std::span<cplx> x, bool inverse) const {
  CVector out(n_, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < n_; ++k) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n_; ++i) {
      const cplx w = roots_[(k * i) % n_];
      acc += x[i] * (inverse ? std::conj(w) : w);
    }
    out[k] = acc;
  }
  std::copy(out.begin(), out.end(), x.begin());
}

CVector fft(std::span<const cplx> x) {
  CVector out(x.begin(), x.end());
  DftPlan(x.size()).forward(out);
  return out;
}

CVector ifft(std::span<const cplx> x) {
  CVector out(x.begin(), x.end());
  DftPlan(x.size()).backward(out);
  const double scale = 1.0 / static_cast<double>(x.size());
  for (auto& v : out) {
    v *= scale;
  }
  return out;
}

// ---------------------------------------------------------------------------

CMatrix u_matrix(std::size_t L, std::size_t Q) {
  if (L == 0 || Q == 0) {
    throw ConfigError("u_matrix: L and Q must be >= 1");
  }
  const CMatrix block = dft_matrix(Q) / std::sqrt(static_cast<double>(Q));
  const auto q = static_cast<Eigen::Index>(Q);
  CMatrix u = CMatrix::Zero(static_cast<Eigen::Index>(L * Q),
                            static_cast<Eigen::Index>(L * Q));
  for (Eigen::Index b = 0; b < static_cast<Eigen::Index>(L); ++b) {
    u.block(b * q, b * q, q, q) = block;
  }
  return u;
}

void apply_u(std::span<cplx> x, std::size_t L, const DftPlan& plan) {
  const std::size_t q = plan.size();
  require_size(x.size(), L * q, "apply_u");
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  for (std::size_t b = 0; b < L; ++b) {
    plan.forward(x.subspan(b * q, q));
  }
  for (auto& v : x) {
    v *= scale;
  }
}

void apply_u_adjoint(std::span<cplx> x, std::size_t L, const DftPlan& plan) {
  const std::size_t q = plan.size();
  require_size(x.size(), L * q, "apply_u_adjoint");
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  for (std::size_t b = 0; b < L; ++b) {
    plan.backward(x.subspan(b * q, q));
  }
  for (auto& v : x) {
    v *= scale;
  }
}

// ---------------------------------------------------------------------------

CMatrix dzt(std::span<const cplx> x, std::size_t Q, std::size_t L) {
  require_size(x.size(), Q * L, "dzt");
  const DftPlan plan(Q);
  CMatrix z(static_cast<Eigen::Index>(Q), static_cast<Eigen::Index>(L));
  CVector column(Q);
  for (std::size_t l = 0; l < L; ++l) {
    for (std::size_t q = 0; q < Q; ++q) {
      column[q] = x[l + q * L];
    }
    plan.forward(column);
    for (std::size_t p = 0; p < Q; ++p) {
      z(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(l)) = column[p];
    }
  }
  return z;
}

// ---------------------------------------------------------------------------

CMatrix block_circulant_build(const CMatrix& v) {
  const Eigen::Index L = v.rows();
  const Eigen::Index Q = v.cols();
  CMatrix s = CMatrix::Zero(L * Q, L * Q);
  for (Eigen::Index bi = 0; bi < Q; ++bi) {
    for (Eigen::Index bj = 0; bj < Q; ++bj) {
      const Eigen::Index q = ((bi - bj) % Q + Q) % Q;
      for (Eigen::Index i = 0; i < L; ++i) {
        s(bi * L + i, bj * L + i) = v(i, q);
      }
    }
  }
  return s;
}

BlockCirculantFactors block_circulant_factorize(const CMatrix& v) {
  const auto L = static_cast<std::size_t>(v.rows());
  const auto Q = static_cast<std::size_t>(v.cols());
  if (L == 0 || Q == 0) {
    throw DimensionError("block_circulant_factorize: empty generator matrix");
  }
  BlockCirculantFactors f{StridePermutation{L, Q}, CVector(L * Q)};
  const DftPlan plan(Q);
  CVector row(Q);
  for (std::size_t l = 0; l < L; ++l) {
    for (std::size_t q = 0; q < Q; ++q) {
      row[q] = v(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(q));
    }
    plan.forward(row);
    // column l of W_Q V^T, stacked
    std::copy(row.begin(), row.end(), f.lambda.begin() + static_cast<std::ptrdiff_t>(l * Q));
  }
  return f;
}

CVector BlockCirculantFactors::apply(std::span<const cplx> x) const {
  CVector y = perm.apply(x);
  const DftPlan plan(Q());
  apply_u(y, L(), plan);
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] *= lambda[i];
  }
  apply_u_adjoint(y, L(), plan);
  return perm.inverse().apply(y);
}

CMatrix BlockCirculantFactors::reconstruct() const {
  const CMatrix p = perm.dense();
  const CMatrix u = u_matrix(L(), Q());
  const Eigen::Map<const Eigen::VectorXcd> diag(lambda.data(),
                                                static_cast<Eigen::Index>(lambda.size()));
  return p.transpose() * u.adjoint() * diag.asDiagonal() * u * p;
}

} // namespace gfdm::tensor
