#include "gfdm/metrics.hpp"

#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gfdm/tensor.hpp"

namespace gfdm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSingularThreshold = 1e-300;

double min_abs(const ZakGrid& zak) { return zak.z.cwiseAbs().minCoeff(); }

double generator_at_shift(const GfdmParams& params, const GeneratorFunction& gen,
                          double alpha, bool& saturated) {
  params.validate();
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ConfigError("roll-off alpha must lie in (0, 1]");
  }
  const double s = shift_function(params.lambda, params.M);
  const double alpha_m = alpha * static_cast<double>(params.M);
  saturated = alpha_m <= s;
  return saturated ? -1.0 : gen(s / alpha_m);
}

} // namespace

ZakGrid zak_spectrum(const GfdmParams& params, const PrototypeFilter& filter) {
  params.validate();
  filter.validate_for(params.K);
  const std::size_t K = params.K;
  const std::size_t M = params.M;
  const double mm = static_cast<double>(M);

  ZakGrid zak{params, CMatrix(static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(M)),
              Eigen::MatrixXd(static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(M))};
  for (std::size_t m = 0; m < M; ++m) {
    // Centered coordinates of (m+lambda)/N and (M-m-lambda)/N are exact negations.
    const double u = (2.0 * static_cast<double>(m) - mm + 2.0 * params.lambda) / mm;
    const cplx head = eval_H_centered(u, filter);
    const cplx tail = std::conj(eval_H_centered(-u, filter));
    for (std::size_t k = 0; k < K; ++k) {
      const cplx z = head + tail * tensor::unit_root(static_cast<long long>(k),
                                                     static_cast<long long>(K));
      const auto ki = static_cast<Eigen::Index>(k);
      const auto mi = static_cast<Eigen::Index>(m);
      zak.z(ki, mi) = z;
      zak.sigma_sq(ki, mi) = std::norm(z);
    }
  }
  return zak;
}

double shift_function(double lambda, std::size_t M) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw ConfigError("lambda must lie in [0, 1)");
  }
  const double folded = lambda > 0.5 ? 1.0 - lambda : lambda;
  return M % 2 == 0 ? 2.0 * folded : 1.0 - 2.0 * folded;
}

double cond_numeric(const ZakGrid& zak) {
  const double lo = min_abs(zak);
  if (lo < kSingularThreshold) {
    return kInf;
  }
  return zak.z.cwiseAbs().maxCoeff() / lo;
}

double cond_closed_caseA(const GfdmParams& params, const GeneratorFunction& gen, double alpha) {
  bool saturated = false;
  const double f = generator_at_shift(params, gen, alpha, saturated);
  if (saturated) {
    return 1.0;
  }
  return f == 0.0 ? kInf : 1.0 / std::abs(f);
}

double cond_closed_caseB(const GfdmParams& params, const GeneratorFunction& gen, double alpha) {
  bool saturated = false;
  const double f = generator_at_shift(params, gen, alpha, saturated);
  if (saturated) {
    return 1.0;
  }
  if (f == 0.0) {
    return kInf;
  }
  // |f| / (1 - sqrt(1 - f^2)) without the cancellation in the denominator.
  return (1.0 + std::sqrt(1.0 - f * f)) / std::abs(f);
}

std::optional<double> cond_closed(const GfdmParams& params, const PrototypeFilter& filter) {
  if (params.K % 2 != 0) {
    return std::nullopt;
  }
  if (filter.effective_beta() % 2 == 1 && params.K % 4 != 0) {
    return std::nullopt;
  }
  if (filter.is_case_a()) {
    return cond_closed_caseA(params, filter.generator, filter.alpha);
  }
  return cond_closed_caseB(params, filter.generator, filter.alpha);
}

double nef(const ZakGrid& zak) {
  if (min_abs(zak) < kSingularThreshold) {
    return kInf;
  }
  const double n = static_cast<double>(zak.sigma_sq.size());
  const double sum = zak.sigma_sq.sum();
  const double inv_sum = zak.sigma_sq.cwiseInverse().sum();
  return sum * inv_sum / (n * n);
}

double sir_metric(const ZakGrid& zak) {
  const double n = static_cast<double>(zak.sigma_sq.size());
  const double mean = zak.sigma_sq.sum() / n;
  return ((zak.sigma_sq.array() / mean) - 1.0).square().sum() / n;
}

double sir_asymptotic(const PrototypeFilter& filter, std::size_t K) {
  filter.validate();
  if (K == 0) {
    throw ConfigError("K must be positive");
  }
  // With u = 2K nu - 1 the integral over [1/(2K), 1/K] becomes (1/K) int_0^1;
  // |H| vanishes for u > alpha.
  auto integrand = [&filter](double u) { return std::norm(eval_H_centered(u, filter)); };
  const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, 0.0, filter.alpha, 15, 1e-12);
  return integral / static_cast<double>(K);
}

double optimal_lambda(std::size_t M) {
  if (M < 2) {
    throw ConfigError("M must be >= 2");
  }
  return M % 2 == 0 ? 0.5 : 0.0;
}

double to_db(double x) { return 10.0 * std::log10(x); }

MetricsReport compute_metrics(const GfdmParams& params, const PrototypeFilter& filter) {
  const ZakGrid zak = zak_spectrum(params, filter);
  MetricsReport r;
  r.cond_numeric = cond_numeric(zak);
  r.cond_closed = cond_closed(params, filter);
  r.nef = nef(zak);
  r.sir_metric = sir_metric(zak);
  r.sir_metric_db = -to_db(r.sir_metric);
  r.sigma_min_sq = zak.sigma_sq.minCoeff();
  r.sigma_max_sq = zak.sigma_sq.maxCoeff();
  return r;
}

std::vector<SweepRow> sweep(std::span<const GfdmParams> points, const PrototypeFilter& filter) {
  std::vector<SweepRow> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    SweepRow row{p, std::nullopt, {}};
    try {
      row.report = compute_metrics(p, filter);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace gfdm
