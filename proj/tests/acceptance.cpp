// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gfdm/dense.hpp"
#include "gfdm/metrics.hpp"
#include "gfdm/modem.hpp"
#include "gfdm/tensor.hpp"

using namespace gfdm;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

CVector random_cvector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(n);
  for (auto& x : v) {
    x = {normal(rng), normal(rng)};
  }
  return v;
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double max_abs_diff(const CVector& a, const CVector& b) {
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    e = std::max(e, std::abs(a[i] - b[i]));
  }
  return e;
}

// S(lambda) written out independently of the library.
double shift(double lambda, std::size_t M) {
  const double l = std::min(lambda, 1.0 - lambda);
  return M % 2 == 0 ? 2.0 * l : 1.0 - 2.0 * l;
}

double expected_cond_rc(double s, double alpha, std::size_t M) {
  const double am = alpha * static_cast<double>(M);
  return am <= s ? 1.0 : 1.0 / std::sin(std::numbers::pi / 2 * s / am);
}

double expected_cond_rrc(double s, double alpha, std::size_t M) {
  const double am = alpha * static_cast<double>(M);
  return am <= s ? 1.0 : 1.0 / std::tan(std::numbers::pi / 4 * s / am);
}

const std::vector<std::size_t> kGridK{16, 32};
const std::vector<std::size_t> kGridM{8, 16};
const std::vector<double> kGridAlpha{0.1, 0.3, 0.5, 0.9};
const std::vector<double> kGridLambda{0.1, 0.25, 0.5};

Outcome criterion1() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  int points = 0;
  for (std::size_t K : kGridK) {
    for (std::size_t M : kGridM) {
      for (double alpha : kGridAlpha) {
        for (double lambda : kGridLambda) {
          const GfdmParams p{K, M, lambda};
          const double s = shift(lambda, M);
          const double rc = cond_numeric(zak_spectrum(p, PrototypeFilter::rc(alpha)));
          const double rrc = cond_numeric(zak_spectrum(p, PrototypeFilter::rrc(alpha)));
          const double want_rc = expected_cond_rc(s, alpha, M);
          const double want_rrc = expected_cond_rrc(s, alpha, M);
          worst = std::max({worst, std::abs(rc - want_rc) / want_rc,
                            std::abs(rrc - want_rrc) / want_rrc});
          points += 2;
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-8 && secs < 5.0,
          std::to_string(points) + " points, worst rel err " + fmt("%.3g", worst) + ", " +
              fmt("%.3f", secs) + " s"};
}

Outcome criterion2() {
  const auto t0 = Clock::now();
  const GfdmParams p{8, 8, 0.0};
  const auto f = PrototypeFilter::rc(0.5);
  const ModulationMatrix a = factorize_A(p, sample_gtilde(p, f));
  const Eigen::VectorXd sv = dense::singular_values(a.dense());
  const double smax = sv(sv.size() - 1);
  const auto tiny = std::count_if(sv.data(), sv.data() + sv.size(),
                                  [smax](double s) { return s < 1e-10 * smax; });
  const double c = cond_numeric(zak_spectrum(p, f));
  const double secs = seconds_since(t0);
  return {tiny == 1 && std::isinf(c) && secs < 2.0,
          std::to_string(tiny) + " singular value(s) below 1e-10*sigma_max (smallest " +
              fmt("%.3g", sv(0)) + "), cond_numeric=" + (std::isinf(c) ? "inf" : fmt("%g", c)) +
              ", " + fmt("%.3f", secs) + " s"};
}

struct RandomConfig {
  GfdmParams params;
  PrototypeFilter filter;
};

std::vector<RandomConfig> random_configs() {
  std::mt19937_64 rng(2024);
  const std::vector<std::size_t> dims{4, 8, 16};
  std::uniform_int_distribution<std::size_t> pick(0, dims.size() - 1);
  std::uniform_real_distribution<double> lam(0.0, 1.0);
  std::uniform_real_distribution<double> al(0.05, 1.0);
  std::vector<RandomConfig> out;
  for (int i = 0; i < 20; ++i) {
    const GfdmParams p{dims[pick(rng)], dims[pick(rng)], lam(rng)};
    const double alpha = al(rng);
    const PrototypeFilter f = i % 3 == 0   ? PrototypeFilter::rc(alpha)
                              : i % 3 == 1 ? PrototypeFilter::rrc(alpha)
                                           : PrototypeFilter::xia(alpha);
    out.push_back({p, f});
  }
  return out;
}

Outcome criterion3() {
  const auto t0 = Clock::now();
  double worst5 = 0.0;
  double worst6 = 0.0;
  for (const auto& c : random_configs()) {
    const ModulationMatrix a = factorize_A(c.params, sample_gtilde(c.params, c.filter));
    const CMatrix ref = build_dense_A(c.params, a.g());
    worst5 = std::max(worst5, max_abs(ref - a.reconstruct_time_domain()));
    worst6 = std::max(worst6, max_abs(ref - a.reconstruct_frequency_domain()));
  }
  const double secs = seconds_since(t0);
  return {worst5 <= 1e-10 && worst6 <= 1e-10 && secs < 30.0,
          "20 configs, time-domain err " + fmt("%.3g", worst5) + ", frequency-domain err " +
              fmt("%.3g", worst6) + ", " + fmt("%.3f", secs) + " s"};
}

Outcome criterion4() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (const auto& c : random_configs()) {
    const ModulationMatrix a = factorize_A(c.params, sample_gtilde(c.params, c.filter));
    const Eigen::VectorXd sv = dense::singular_values(build_dense_A(c.params, a.g()));
    const ZakGrid z = zak_spectrum(c.params, c.filter);
    Eigen::VectorXd want = z.z.cwiseAbs().reshaped() / std::sqrt(static_cast<double>(c.params.K));
    std::sort(want.data(), want.data() + want.size());
    worst = std::max(worst, (sv - want).cwiseAbs().maxCoeff());
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-9, "20 configs, worst err " + fmt("%.3g", worst) + ", " +
                             fmt("%.3f", secs) + " s"};
}

Outcome criterion5() {
  const GfdmParams p{4, 2, 0.5};
  const auto f = PrototypeFilter::rc(1.0);
  const ZakGrid z = zak_spectrum(p, f);
  std::vector<double> want{0.5, 0.75, 0.75, 1.0};
  double err = 0.0;
  for (Eigen::Index m = 0; m < 2; ++m) {
    std::vector<double> col(z.sigma_sq.col(m).data(), z.sigma_sq.col(m).data() + 4);
    std::sort(col.begin(), col.end());
    for (std::size_t i = 0; i < 4; ++i) {
      err = std::max(err, std::abs(col[i] - want[i]));
    }
  }
  const double ec = std::abs(cond_numeric(z) - std::sqrt(2.0));
  const double en = std::abs(nef(z) - 1.0625);
  const double es = std::abs(sir_metric(z) - 1.0 / 18.0);
  const double worst = std::max({err, ec, en, es});
  return {worst <= 1e-10, "sigma^2 err " + fmt("%.3g", err) + ", cond err " + fmt("%.3g", ec) +
                              ", NEF err " + fmt("%.3g", en) + ", SIR err " + fmt("%.3g", es)};
}

Outcome criterion6() {
  int violations = 0;
  int points = 0;
  for (std::size_t K : kGridK) {
    for (std::size_t M : kGridM) {
      for (double alpha : kGridAlpha) {
        for (double lambda : kGridLambda) {
          for (const auto gen : {GeneratorFunction{GeneratorKind::RaisedCosine},
                                 GeneratorFunction{GeneratorKind::Linear}}) {
            const GfdmParams p{K, M, lambda};
            const PrototypeFilter a{FilterFamily::CaseA, 0, alpha, gen};
            const PrototypeFilter b{FilterFamily::CaseB, 0, alpha, gen};
            const double ca = cond_numeric(zak_spectrum(p, a));
            const double cb = cond_numeric(zak_spectrum(p, b));
            violations += ca <= cb ? 0 : 1;
            ++points;
          }
        }
      }
    }
  }
  return {violations == 0, std::to_string(points) + " points (sin and linear generators), " +
                               std::to_string(violations) + " violations"};
}

Outcome criterion7() {
  double worst = 0.0;
  int pairs = 0;
  for (std::size_t M : {4u, 5u}) {
    for (const auto& f : {PrototypeFilter::rc(0.5), PrototypeFilter::rrc(0.5)}) {
      for (int i = 1; i <= 21; ++i) {
        const double lambda = i / 22.0;
        const MetricsReport a = compute_metrics({8, M, lambda}, f);
        const MetricsReport b = compute_metrics({8, M, 1.0 - lambda}, f);
        worst = std::max({worst, std::abs(a.cond_numeric - b.cond_numeric),
                          std::abs(a.nef - b.nef), std::abs(a.sir_metric - b.sir_metric),
                          std::abs(a.sigma_min_sq - b.sigma_min_sq),
                          std::abs(a.sigma_max_sq - b.sigma_max_sq)});
        ++pairs;
      }
    }
  }
  return {worst <= 1e-10,
          std::to_string(pairs) + " lambda pairs (rc, rrc), worst diff " + fmt("%.3g", worst)};
}

Outcome criterion8() {
  // (a) finite-M metric against the asymptotic interference integral
  const auto f = PrototypeFilter::rc(0.5);
  const std::size_t M = 64;
  const double sir = sir_metric(zak_spectrum({16, M, optimal_lambda(M)}, f));
  const double integral = sir_asymptotic(f, 16);
  const double rel = std::abs(sir - integral) / integral;
  // (b) closed value of the integral for RC alpha=1, K=4
  const double got = sir_asymptotic(PrototypeFilter::rc(1.0), 4);
  const double stated = 3.0 / 16.0 - 1.0 / (2.0 * std::numbers::pi);
  const double diff = std::abs(got - stated);
  const bool pass_a = rel <= 0.05;
  const bool pass_b = diff <= 1e-6;
  return {pass_a && pass_b,
          std::string("(a) ") + (pass_a ? "ok" : "FAIL") + ": sir_metric=" + fmt("%.6g", sir) +
              " vs integral=" + fmt("%.6g", integral) + " (rel " + fmt("%.3g", rel) +
              ", need <= 0.05); (b) " + (pass_b ? "ok" : "FAIL") + ": integral=" +
              fmt("%.9g", got) + " vs 3/16-1/(2pi)=" + fmt("%.9g", stated) + " (diff " +
              fmt("%.3g", diff) + ", need <= 1e-6)"};
}

Outcome criterion9() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t L = dim(rng);
    const std::size_t Q = dim(rng);
    const CMatrix v = tensor::unvec(random_cvector(L * Q, rng), L, Q);
    worst = std::max(worst, max_abs(tensor::block_circulant_build(v) -
                                    tensor::block_circulant_factorize(v).reconstruct()));
  }
  const double secs = seconds_since(t0);
  return {worst < 1e-10 && secs < 5.0, "50 instances, worst err " + fmt("%.3g", worst) + ", " +
                                           fmt("%.3f", secs) + " s"};
}

template <class F> double median_seconds(F&& f, int reps) {
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = Clock::now();
    f();
    t.push_back(seconds_since(t0));
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

Outcome criterion10() {
  const GfdmParams p{64, 64, 0.5};
  const ModulationMatrix a = factorize_A(p, sample_gtilde(p, PrototypeFilter::rc(0.5)));
  const CMatrix dense_a = a.dense();
  std::mt19937_64 rng(10);
  const DataGrid d(64, 64, random_cvector(p.N(), rng));
  const Eigen::Map<const Eigen::VectorXcd> dv(d.symbols.data(),
                                              static_cast<Eigen::Index>(p.N()));

  Eigen::VectorXcd ref;
  GfdmSignal fast;
  const double t_dense = median_seconds([&] { ref = dense_a * dv; }, 5);
  const double t_fast = median_seconds([&] { fast = modulate_fast(a, d); }, 51);
  const CVector ref_v(ref.data(), ref.data() + ref.size());
  const double err = max_abs_diff(fast.samples, ref_v);
  const double speedup = t_dense / t_fast;
  const bool fast_enough = speedup >= 10.0;
  return {err <= 1e-10,
          "N=4096 max err " + fmt("%.3g", err) + "; dense matvec " + fmt("%.3g", t_dense * 1e3) +
              " ms, fast " + fmt("%.3g", t_fast * 1e3) + " ms, speedup " + fmt("%.1f", speedup) +
              "x (" + (fast_enough ? "meets" : "below") + " the 10x target)"};
}

Outcome criterion11() {
  const auto t0 = Clock::now();
  const GfdmParams p{32, 16, 0.5};
  const ModulationMatrix a = factorize_A(p, sample_gtilde(p, PrototypeFilter::rc(0.5)));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> bit(0, 1);
  const double s = 1.0 / std::sqrt(2.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    DataGrid d(32, 16);
    for (auto& x : d.symbols) {
      x = {bit(rng) ? s : -s, bit(rng) ? s : -s};
    }
    const DataGrid back = demodulate_zf(a, modulate_fast(a, d));
    worst = std::max(worst, max_abs_diff(back.symbols, d.symbols));
  }
  return {worst <= 1e-9, "1000 QPSK grids (rc alpha=0.5), worst err " + fmt("%.3g", worst) +
                             ", " + fmt("%.3f", seconds_since(t0)) + " s"};
}

} // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"closed-form condition number", criterion1},
      {"singularity at lambda=0 (K=M=8)", criterion2},
      {"factorization equivalence", criterion3},
      {"singular values = |z|/sqrt(K)", criterion4},
      {"hand-derived point values", criterion5},
      {"case A vs case B conditioning", criterion6},
      {"lambda <-> 1-lambda symmetry", criterion7},
      {"asymptotic SIR", criterion8},
      {"block-circulant factorization", criterion9},
      {"fast modulator at N=4096", criterion10},
      {"ZF round trip", criterion11},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.passed ? 0 : 1;
    std::printf("%s  [%2d] %-34s %s\n", o.passed ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
