#pragma once

// GFDM modulation matrix A, with [A]_{n, k+mK} = g[<n - mK>_N] exp(j2pi kn/K),
// in dense form and in its two Zak-domain factorizations:
//
//   time domain:       A = Pi_{K,M}^T U_{K,M}^H  Lambda(g)  U_{K,M} Pi_{K,M} U_{M,K}^H
//   frequency domain:  A = (W_N^H/sqrt(N)) Pi_{M,K}^T U_{M,K}^H  Lambda(g~)
//                          U_{M,K} Pi_{M,K} U_{K,M} Pi_{K,M}
//
// with Lambda(g)  = sqrt(K) vec(Z_{M,K}(g)) and Lambda(g~) = vec(Z_{K,M}(g~)) / sqrt(K),
// g~ = W_N g. The fast modulator and both receivers run the frequency-domain
// form with FFTs only.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "gfdm/filter.hpp"
#include "gfdm/tensor.hpp"
#include "gfdm/types.hpp"

namespace gfdm {

/// K x M data symbols, flattened as [d]_{k + mK} = d_{k,m}.
struct DataGrid {
  std::size_t K = 0;
  std::size_t M = 0;
  CVector symbols;

  DataGrid() = default;
  DataGrid(std::size_t k, std::size_t m) : K(k), M(m), symbols(k * m) {}
  DataGrid(std::size_t k, std::size_t m, CVector d);

  cplx& at(std::size_t k, std::size_t m) { return symbols[k + m * K]; }
  const cplx& at(std::size_t k, std::size_t m) const { return symbols[k + m * K]; }
};

struct GfdmSignal {
  CVector samples;
};

/// Zero-forcing was requested on a (numerically) singular modulation matrix.
class SingularModulation : public std::runtime_error {
public:
  SingularModulation(const GfdmParams& params, double sigma_min, double sigma_max);

  double sigma_min() const { return sigma_min_; }
  double sigma_max() const { return sigma_max_; }
  const GfdmParams& params() const { return params_; }

private:
  GfdmParams params_;
  double sigma_min_;
  double sigma_max_;
};

/// Dense modulation matrix from its definition. N x N memory; meant for oracles and tests.
CMatrix build_dense_A(const GfdmParams& params, std::span<const cplx> g);

/// Factorized modulation matrix. Immutable; safe to share between threads.
class ModulationMatrix {
public:
  ModulationMatrix(const GfdmParams& params, std::span<const cplx> gtilde);

  const GfdmParams& params() const { return params_; }
  const CVector& gtilde() const { return gtilde_; }
  /// Time-domain filter g = time_filter(g~).
  const CVector& g() const { return g_; }
  /// Diagonal of Lambda(g~); |entries| are the singular values of A.
  const CVector& lambda_gtilde() const { return lambda_gtilde_; }
  /// Diagonal of Lambda(g).
  const CVector& lambda_g() const { return lambda_g_; }
  /// ||g||^2 = ||g~||^2 / N.
  double filter_energy() const { return filter_energy_; }

  double sigma_min() const;
  double sigma_max() const;

  /// Dense A from the definition. Built on each call, never cached.
  CMatrix dense() const;
  /// Dense product of the time-domain factors.
  CMatrix reconstruct_time_domain() const;
  /// Dense product of the frequency-domain factors.
  CMatrix reconstruct_frequency_domain() const;

  // Pipeline stages of the frequency-domain form. All O(N log N) when K and M
  // are powers of two; nothing N x N is formed.
  CVector apply_v_adjoint(std::span<const cplx> d) const; // V^H d
  CVector apply_v(std::span<const cplx> y) const;         // V y
  CVector apply_u(std::span<const cplx> y) const;         // U y
  CVector apply_u_adjoint(std::span<const cplx> x) const; // U^H x

private:
  GfdmParams params_;
  CVector gtilde_;
  CVector g_;
  CVector lambda_gtilde_;
  CVector lambda_g_;
  double filter_energy_ = 0.0;
  tensor::DftPlan plan_k_;
  tensor::DftPlan plan_m_;
  tensor::DftPlan plan_n_;
};

ModulationMatrix factorize_A(const GfdmParams& params, std::span<const cplx> gtilde);

/// x = A d through U Lambda V^H.
GfdmSignal modulate_fast(const ModulationMatrix& a, const DataGrid& d);

inline constexpr double kDefaultSingularTol = 1e-12;

/// d = A^{-1} y by inverting Lambda(g~) inside the factorization.
/// Throws SingularModulation when min|Lambda| <= tol * max|Lambda|.
DataGrid demodulate_zf(const ModulationMatrix& a, const GfdmSignal& y,
                       double tol = kDefaultSingularTol);

/// d = A^H y / ||g||^2.
DataGrid demodulate_mf(const ModulationMatrix& a, const GfdmSignal& y);

/// Adds circular complex Gaussian noise of per-sample variance
/// ||x||^2 / (N 10^(snr_db/10)). snr_db = +inf returns x unchanged.
GfdmSignal awgn(const GfdmSignal& x, double snr_db, std::uint64_t seed);

} // namespace gfdm
