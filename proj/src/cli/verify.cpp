#include "gfdm/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>

#include "gfdm/cli/table.hpp"
#include "gfdm/dense.hpp"
#include "gfdm/metrics.hpp"
#include "gfdm/modem.hpp"
#include "gfdm/tensor.hpp"

namespace gfdm::cli {

namespace {

struct Accumulator {
  CheckResult result;

  Accumulator(std::string name, double tol) {
    result.name = std::move(name);
    result.tolerance = tol;
    result.passed = true;
  }

  void record(double error, const std::string& where) {
    ++result.cases;
    if (!(error <= result.worst_error)) {
      result.worst_error = error;
      result.detail = where;
    }
    if (!(error <= result.tolerance)) {
      result.passed = false;
    }
  }
};

std::string describe(const GfdmParams& p, const PrototypeFilter& f) {
  return "K=" + std::to_string(p.K) + " M=" + std::to_string(p.M) +
         " lambda=" + format_number(p.lambda) + " " + f.label();
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

CVector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(n);
  for (auto& x : v) {
    x = {normal(rng), normal(rng)};
  }
  return v;
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const std::vector<std::size_t> ks = options.quick ? std::vector<std::size_t>{4, 8}
                                                    : std::vector<std::size_t>{4, 8, 16};
  const std::vector<std::size_t> ms = options.quick
                                          ? std::vector<std::size_t>{2, 3, 4, 8}
                                          : std::vector<std::size_t>{2, 3, 4, 5, 8, 16};
  const std::vector<double> lambdas{0.25, 0.5};
  const std::vector<PrototypeFilter> filters{PrototypeFilter::rc(0.5), PrototypeFilter::rrc(0.5),
                                             PrototypeFilter::xia(0.5)};

  Accumulator eq5("dense A vs time-domain factorization", 1e-10);
  Accumulator eq6("dense A vs frequency-domain factorization", 1e-10);
  Accumulator fast("fast modulator vs dense A d (relative)", 1e-10);
  Accumulator svd("dense SVD vs |z|/sqrt(K)", 1e-9);
  Accumulator closed("closed-form vs numeric cond (relative)", 1e-8);
  Accumulator zak("DZT of sampled g~ vs closed-form Zak spectrum", 1e-10);
  Accumulator sym("sigma^2 symmetry lambda <-> 1-lambda", 1e-10);
  Accumulator zf("ZF round trip", 1e-9);
  Accumulator bc("block-circulant reconstruction", 1e-10);

  std::mt19937_64 rng(20240601);

  for (std::size_t K : ks) {
    for (std::size_t M : ms) {
      for (const auto& filter : filters) {
        for (double lambda : lambdas) {
          const GfdmParams p{K, M, lambda};
          const std::string where = describe(p, filter);
          const CVector gt = sample_gtilde(p, filter);
          const ModulationMatrix a = factorize_A(p, gt);
          const CMatrix dense_a = a.dense();

          eq5.record(max_abs(dense_a - a.reconstruct_time_domain()), where);
          eq6.record(max_abs(dense_a - a.reconstruct_frequency_domain()), where);

          const DataGrid d(K, M, random_vector(p.N(), rng));
          const GfdmSignal x = modulate_fast(a, d);
          const Eigen::Map<const Eigen::VectorXcd> dv(d.symbols.data(),
                                                      static_cast<Eigen::Index>(p.N()));
          const Eigen::VectorXcd ref = dense_a * dv;
          const Eigen::Map<const Eigen::VectorXcd> xv(x.samples.data(),
                                                      static_cast<Eigen::Index>(p.N()));
          fast.record((xv - ref).cwiseAbs().maxCoeff() / ref.cwiseAbs().maxCoeff(), where);

          const ZakGrid grid = zak_spectrum(p, filter);
          Eigen::VectorXd from_zak(grid.z.size());
          const double sk = std::sqrt(static_cast<double>(K));
          for (Eigen::Index i = 0; i < grid.z.size(); ++i) {
            from_zak(i) = std::abs(grid.z(i)) / sk;
          }
          std::sort(from_zak.data(), from_zak.data() + from_zak.size());
          svd.record((dense::singular_values(dense_a) - from_zak).cwiseAbs().maxCoeff(), where);

          const double numeric = cond_numeric(grid);
          if (const auto cf = cond_closed(p, filter); cf && std::isfinite(*cf)) {
            closed.record(std::abs(*cf - numeric) / numeric, where);
          }

          zak.record(max_abs(tensor::dzt(gt, K, M) - grid.z), where);

          if (numeric < 1e6) {
            const DataGrid back = demodulate_zf(a, x);
            double err = 0.0;
            for (std::size_t i = 0; i < p.N(); ++i) {
              err = std::max(err, std::abs(back.symbols[i] - d.symbols[i]));
            }
            zf.record(err, where);
          }
        }

        for (double lambda : {0.1, 0.25, 0.4}) {
          const double mirrored = options.fault == Fault::LambdaMisSign
                                      ? std::fmod(1.0 + lambda, 1.0)
                                      : 1.0 - lambda;
          const ZakGrid lo = zak_spectrum({K, M, lambda}, filter);
          const ZakGrid hi = zak_spectrum({K, M, mirrored}, filter);
          double err = 0.0;
          for (std::size_t k = 0; k < K; ++k) {
            for (std::size_t m = 0; m < M; ++m) {
              err = std::max(err, std::abs(hi.sigma_sq(static_cast<Eigen::Index>(k),
                                                       static_cast<Eigen::Index>(m)) -
                                           lo.sigma_sq(static_cast<Eigen::Index>(k),
                                                       static_cast<Eigen::Index>(M - 1 - m))));
            }
          }
          sym.record(err, describe({K, M, lambda}, filter));
        }
      }
    }
  }

  std::uniform_int_distribution<std::size_t> dim(1, 8);
  const std::size_t instances = options.quick ? 20 : 50;
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t L = dim(rng);
    const std::size_t Q = dim(rng);
    const CMatrix v = tensor::unvec(random_vector(L * Q, rng), L, Q);
    const auto factors = tensor::block_circulant_factorize(v);
    bc.record(max_abs(tensor::block_circulant_build(v) - factors.reconstruct()),
              "L=" + std::to_string(L) + " Q=" + std::to_string(Q));
  }

  return {eq5.result, eq6.result, fast.result,   svd.result, closed.result,
          zak.result, sym.result, zf.result,     bc.result};
}

void print_verification(std::ostream& os, const std::vector<CheckResult>& results) {
  std::size_t width = 0;
  for (const auto& r : results) {
    width = std::max(width, r.name.size());
  }
  for (const auto& r : results) {
    os << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width))
       << r.name << "  cases=" << r.cases << "  worst=" << format_number(r.worst_error)
       << "  tol=" << format_number(r.tolerance);
    if (!r.detail.empty()) {
      os << "  at " << r.detail;
    }
    os << '\n';
  }
}

} // namespace gfdm::cli
