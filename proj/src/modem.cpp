#include "gfdm/modem.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace gfdm {

namespace {

std::string singular_message(const GfdmParams& p, double smin, double smax) {
  std::ostringstream os;
  os << "SingularModulation: modulation matrix is singular for lambda=" << p.lambda
     << ", M=" << p.M << ", K=" << p.K << " (sigma_min=" << smin
     << ", sigma_max=" << smax << ")";
  return os.str();
}

void require_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(want) +
                         " samples, got " + std::to_string(got));
  }
}

CMatrix diagonal(const CVector& v) {
  const Eigen::Map<const Eigen::VectorXcd> map(v.data(), static_cast<Eigen::Index>(v.size()));
  return map.asDiagonal();
}

} // namespace

DataGrid::DataGrid(std::size_t k, std::size_t m, CVector d) : K(k), M(m), symbols(std::move(d)) {
  require_length(symbols.size(), K * M, "DataGrid");
}

SingularModulation::SingularModulation(const GfdmParams& params, double sigma_min,
                                       double sigma_max)
    : std::runtime_error(singular_message(params, sigma_min, sigma_max)),
      params_(params), sigma_min_(sigma_min), sigma_max_(sigma_max) {}

CMatrix build_dense_A(const GfdmParams& params, std::span<const cplx> g) {
  const std::size_t N = params.N();
  const std::size_t K = params.K;
  const std::size_t M = params.M;
  require_length(g.size(), N, "build_dense_A");

  CVector roots(K);
  for (std::size_t r = 0; r < K; ++r) {
    roots[r] = tensor::unit_root(static_cast<long long>(r), static_cast<long long>(K));
  }
  CMatrix a(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  for (std::size_t m = 0; m < M; ++m) {
    for (std::size_t k = 0; k < K; ++k) {
      const auto col = static_cast<Eigen::Index>(k + m * K);
      for (std::size_t n = 0; n < N; ++n) {
        const std::size_t shifted = (n + N - m * K) % N;
        a(static_cast<Eigen::Index>(n), col) = g[shifted] * roots[(k * n) % K];
      }
    }
  }
  return a;
}

// ---------------------------------------------------------------------------

ModulationMatrix::ModulationMatrix(const GfdmParams& params, std::span<const cplx> gtilde)
    : params_(params), gtilde_(gtilde.begin(), gtilde.end()), plan_k_(params.K),
      plan_m_(params.M), plan_n_(params.N()) {
  const std::size_t N = params.N();
  const std::size_t K = params.K;
  const std::size_t M = params.M;
  require_length(gtilde_.size(), N, "factorize_A");

  g_ = time_filter(gtilde_);

  const double sk = std::sqrt(static_cast<double>(K));
  lambda_gtilde_ = tensor::vec(tensor::dzt(gtilde_, K, M));
  for (auto& v : lambda_gtilde_) {
    v /= sk;
  }
  lambda_g_ = tensor::vec(tensor::dzt(g_, M, K));
  for (auto& v : lambda_g_) {
    v *= sk;
  }

  double energy = 0.0;
  for (const auto& v : gtilde_) {
    energy += std::norm(v);
  }
  filter_energy_ = energy / static_cast<double>(N);
}

double ModulationMatrix::sigma_min() const {
  double s = std::abs(lambda_gtilde_.front());
  for (const auto& v : lambda_gtilde_) {
    s = std::min(s, std::abs(v));
  }
  return s;
}

double ModulationMatrix::sigma_max() const {
  double s = 0.0;
  for (const auto& v : lambda_gtilde_) {
    s = std::max(s, std::abs(v));
  }
  return s;
}

CMatrix ModulationMatrix::dense() const { return build_dense_A(params_, g_); }

CMatrix ModulationMatrix::reconstruct_time_domain() const {
  const std::size_t K = params_.K;
  const std::size_t M = params_.M;
  const CMatrix p_km = tensor::StridePermutation{K, M}.dense();
  const CMatrix u_km = tensor::u_matrix(K, M);
  const CMatrix u_mk = tensor::u_matrix(M, K);
  return p_km.transpose() * u_km.adjoint() * diagonal(lambda_g_) * u_km * p_km *
         u_mk.adjoint();
}

CMatrix ModulationMatrix::reconstruct_frequency_domain() const {
  const std::size_t K = params_.K;
  const std::size_t M = params_.M;
  const std::size_t N = params_.N();
  const CMatrix p_km = tensor::StridePermutation{K, M}.dense();
  const CMatrix p_mk = tensor::StridePermutation{M, K}.dense();
  const CMatrix u_km = tensor::u_matrix(K, M);
  const CMatrix u_mk = tensor::u_matrix(M, K);
  const CMatrix w_n = tensor::dft_matrix(N) / std::sqrt(static_cast<double>(N));
  return w_n.adjoint() * p_mk.transpose() * u_mk.adjoint() * diagonal(lambda_gtilde_) *
         u_mk * p_mk * u_km * p_km;
}

CVector ModulationMatrix::apply_v_adjoint(std::span<const cplx> d) const {
  const std::size_t K = params_.K;
  const std::size_t M = params_.M;
  require_length(d.size(), params_.N(), "apply_v_adjoint");
  CVector y = tensor::StridePermutation{K, M}.apply(d);
  tensor::apply_u(y, K, plan_m_);
  y = tensor::StridePermutation{M, K}.apply(y);
  tensor::apply_u(y, M, plan_k_);
  return y;
}

CVector ModulationMatrix::apply_v(std::span<const cplx> y) const {
  const std::size_t K = params_.K;
  const std::size_t M = params_.M;
  require_length(y.size(), params_.N(), "apply_v");
  CVector z(y.begin(), y.end());
  tensor::apply_u_adjoint(z, M, plan_k_);
  z = tensor::StridePermutation{K, M}.apply(z);
  tensor::apply_u_adjoint(z, K, plan_m_);
  return tensor::StridePermutation{M, K}.apply(z);
}

CVector ModulationMatrix::apply_u(std::span<const cplx> y) const {
  const std::size_t K = params_.K;
  const std::size_t M = params_.M;
  require_length(y.size(), params_.N(), "apply_u");
  CVector z(y.begin(), y.end());
  tensor::apply_u_adjoint(z, M, plan_k_);
  z = tensor::StridePermutation{K, M}.apply(z);
  plan_n_.backward(z);
  const double scale = 1.0 / std::sqrt(static_cast<double>(params_.N()));
  for (auto& v : z) {
    v *= scale;
  }
  return z;
}

CVector ModulationMatrix::apply_u_adjoint(std::span<const cplx> x) const {
  const std::size_t K = params_.K;
  const std::size_t M = params_.M;
  require_length(x.size(), params_.N(), "apply_u_adjoint");
  CVector z(x.begin(), x.end());
  plan_n_.forward(z);
  const double scale = 1.0 / std::sqrt(static_cast<double>(params_.N()));
  for (auto& v : z) {
    v *= scale;
  }
  z = tensor::StridePermutation{M, K}.apply(z);
  tensor::apply_u(z, M, plan_k_);
  return z;
}

ModulationMatrix factorize_A(const GfdmParams& params, std::span<const cplx> gtilde) {
  return ModulationMatrix(params, gtilde);
}

// ---------------------------------------------------------------------------

GfdmSignal modulate_fast(const ModulationMatrix& a, const DataGrid& d) {
  const auto& p = a.params();
  if (d.K != p.K || d.M != p.M) {
    throw DimensionError("modulate_fast: data grid is " + std::to_string(d.K) + "x" +
                         std::to_string(d.M) + ", expected " + std::to_string(p.K) + "x" +
                         std::to_string(p.M));
  }
  CVector y = a.apply_v_adjoint(d.symbols);
  const auto& lambda = a.lambda_gtilde();
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] *= lambda[i];
  }
  return {a.apply_u(y)};
}

DataGrid demodulate_zf(const ModulationMatrix& a, const GfdmSignal& y, double tol) {
  const auto& p = a.params();
  require_length(y.samples.size(), p.N(), "demodulate_zf");
  const double smin = a.sigma_min();
  const double smax = a.sigma_max();
  if (!(smin > tol * smax)) {
    throw SingularModulation(p, smin, smax);
  }
  CVector z = a.apply_u_adjoint(y.samples);
  const auto& lambda = a.lambda_gtilde();
  for (std::size_t i = 0; i < z.size(); ++i) {
    z[i] /= lambda[i];
  }
  return DataGrid(p.K, p.M, a.apply_v(z));
}

DataGrid demodulate_mf(const ModulationMatrix& a, const GfdmSignal& y) {
  const auto& p = a.params();
  require_length(y.samples.size(), p.N(), "demodulate_mf");
  CVector z = a.apply_u_adjoint(y.samples);
  const auto& lambda = a.lambda_gtilde();
  for (std::size_t i = 0; i < z.size(); ++i) {
    z[i] *= std::conj(lambda[i]);
  }
  CVector d = a.apply_v(z);
  const double energy = a.filter_energy();
  for (auto& v : d) {
    v /= energy;
  }
  return DataGrid(p.K, p.M, std::move(d));
}

GfdmSignal awgn(const GfdmSignal& x, double snr_db, std::uint64_t seed) {
  if (std::isinf(snr_db) && snr_db > 0.0) {
    return x;
  }
  if (!std::isfinite(snr_db)) {
    throw ConfigError("awgn: snr_db must be finite or +inf");
  }
  const std::size_t n = x.samples.size();
  double power = 0.0;
  for (const auto& v : x.samples) {
    power += std::norm(v);
  }
  const double variance = power / (static_cast<double>(n) * std::pow(10.0, snr_db / 10.0));
  if (variance == 0.0) {
    return x;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
  GfdmSignal y = x;
  for (auto& v : y.samples) {
    const double re = normal(rng);
    const double im = normal(rng);
    v += cplx{re, im};
  }
  return y;
}

} // namespace gfdm
