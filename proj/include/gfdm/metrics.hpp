#pragma once

// Conditioning of the modulation matrix from the Zak spectrum of g~:
// z_{k,m}(lambda) = H((m+lambda)/N) + conj(H((M-m-lambda)/N)) exp(j2pi k/K).
// The singular values of A are |z_{k,m}| / sqrt(K).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfdm/filter.hpp"
#include "gfdm/types.hpp"

namespace gfdm {

struct ZakGrid {
  GfdmParams params;
  CMatrix z;                ///< K x M
  Eigen::MatrixXd sigma_sq; ///< |z|^2, K x M
};

/// Closed-form Zak spectrum. Agrees with dzt(sample_gtilde(params, filter), K, M).
ZakGrid zak_spectrum(const GfdmParams& params, const PrototypeFilter& filter);

/// S(lambda): 2 lambda for even M, 1 - 2 lambda for odd M, on [0, 0.5];
/// lambda in (0.5, 1) is mapped through S(lambda) = S(1 - lambda).
double shift_function(double lambda, std::size_t M);

/// max|z| / min|z|; +inf when min|z| < 1e-300.
double cond_numeric(const ZakGrid& zak);

/// 1 if M alpha <= S(lambda), else 1 / |f^a(S/(alpha M))|.
double cond_closed_caseA(const GfdmParams& params, const GeneratorFunction& gen, double alpha);

/// 1 if M alpha <= S(lambda), else |f|/(1 - sqrt(1 - f^2)), f = f^a(S/(alpha M)).
double cond_closed_caseB(const GfdmParams& params, const GeneratorFunction& gen, double alpha);

/// Closed form for the filter's family. Empty where the derivation does not
/// apply (odd K, or odd phase class without K % 4 == 0).
std::optional<double> cond_closed(const GfdmParams& params, const PrototypeFilter& filter);

/// (1/N^2) (sum sigma^2)(sum 1/sigma^2); +inf on a singular spectrum.
double nef(const ZakGrid& zak);

/// (1/N) sum (sigma^2/mean(sigma^2) - 1)^2.
double sir_metric(const ZakGrid& zak);

/// 2 * integral_{1/(2K)}^{1/2} |H(nu)|^2 dnu.
double sir_asymptotic(const PrototypeFilter& filter, std::size_t K);

/// 0.5 for even M, 0 for odd M.
double optimal_lambda(std::size_t M);

/// 10 log10(x), +inf for x = +inf.
double to_db(double x);

struct MetricsReport {
  double cond_numeric = 1.0;
  std::optional<double> cond_closed;
  double nef = 1.0;
  double sir_metric = 0.0;
  double sir_metric_db = 0.0; ///< -10 log10(sir_metric)
  double sigma_min_sq = 0.0;
  double sigma_max_sq = 0.0;
};

MetricsReport compute_metrics(const GfdmParams& params, const PrototypeFilter& filter);

struct SweepRow {
  GfdmParams params;
  std::optional<MetricsReport> report; ///< empty when the point failed
  std::string error;
};

/// One report per point, in input order.
std::vector<SweepRow> sweep(std::span<const GfdmParams> points, const PrototypeFilter& filter);

} // namespace gfdm
