#include "gfdm/filter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gfdm/tensor.hpp"

namespace gfdm {

double GeneratorFunction::operator()(double x) const {
  switch (kind) {
  case GeneratorKind::Linear:
    return -x;
  case GeneratorKind::RaisedCosine:
  default:
    return -std::sin(0.5 * std::numbers::pi * x);
  }
}

std::string_view GeneratorFunction::name() const {
  return kind == GeneratorKind::Linear ? "linear" : "sin";
}

GeneratorFunction GeneratorFunction::from_name(std::string_view name) {
  if (name == "sin" || name == "rc" || name == "raised-cosine") {
    return {GeneratorKind::RaisedCosine};
  }
  if (name == "linear") {
    return {GeneratorKind::Linear};
  }
  throw ConfigError("unknown generator '" + std::string(name) + "' (expected sin|linear)");
}

std::string_view family_name(FilterFamily family) {
  switch (family) {
  case FilterFamily::CaseA: return "a";
  case FilterFamily::CaseB: return "b";
  case FilterFamily::Xia: return "xia";
  }
  return "?";
}

PrototypeFilter PrototypeFilter::rc(double alpha) {
  return {FilterFamily::CaseA, 0, alpha, {GeneratorKind::RaisedCosine}};
}

PrototypeFilter PrototypeFilter::rrc(double alpha) {
  return {FilterFamily::CaseB, 0, alpha, {GeneratorKind::RaisedCosine}};
}

PrototypeFilter PrototypeFilter::xia(double alpha) {
  return {FilterFamily::Xia, 1, alpha, {GeneratorKind::RaisedCosine}};
}

PrototypeFilter PrototypeFilter::case_b(double alpha, int beta, GeneratorFunction gen) {
  return {FilterFamily::CaseB, beta, alpha, gen};
}

int PrototypeFilter::effective_beta() const {
  switch (family) {
  case FilterFamily::CaseA: return 0;
  case FilterFamily::Xia: return 1;
  case FilterFamily::CaseB:
  default:
    return beta;
  }
}

void PrototypeFilter::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ConfigError("roll-off alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
  if (family == FilterFamily::CaseB && (beta < 0 || beta > 3)) {
    throw ConfigError("beta must be one of 0, 1, 2, 3, got " + std::to_string(beta));
  }
}

void PrototypeFilter::validate_for(std::size_t K) const {
  validate();
  if (effective_beta() % 2 == 1 && K % 4 != 0) {
    throw ConfigError("phase class beta=" + std::to_string(effective_beta()) +
                      " requires K to be a multiple of 4, got K=" + std::to_string(K));
  }
}

std::string PrototypeFilter::label() const {
  const bool rc_gen = generator.kind == GeneratorKind::RaisedCosine;
  switch (family) {
  case FilterFamily::CaseA:
    return rc_gen ? "rc" : "caseA(" + std::string(generator.name()) + ")";
  case FilterFamily::Xia:
    return rc_gen ? "xia" : "xia(" + std::string(generator.name()) + ")";
  case FilterFamily::CaseB:
    if (rc_gen && beta == 0) {
      return "rrc";
    }
    return "caseB(beta=" + std::to_string(beta) + "," + std::string(generator.name()) + ")";
  }
  return "?";
}

void GfdmParams::validate() const {
  if (K < 4) {
    throw ConfigError("K must be >= 4, got " + std::to_string(K));
  }
  if (M < 2) {
    throw ConfigError("M must be >= 2, got " + std::to_string(M));
  }
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw ConfigError("lambda must lie in [0, 1), got " + std::to_string(lambda));
  }
}

// ---------------------------------------------------------------------------

double eval_f_centered(double u, double alpha, const GeneratorFunction& gen) {
  if (u <= -alpha) {
    return 1.0;
  }
  if (u > alpha) {
    return -1.0;
  }
  return gen(u / alpha);
}

double eval_f(double nu, double alpha, std::size_t K, const GeneratorFunction& gen) {
  const double kk = static_cast<double>(K);
  if (!(nu >= 0.0 && nu <= 1.0 / kk)) {
    throw ConfigError("eval_f: nu must lie in [0, 1/K]");
  }
  return eval_f_centered(2.0 * kk * nu - 1.0, alpha, gen);
}

cplx eval_H_centered(double u, const PrototypeFilter& filter) {
  const double f = eval_f_centered(u, filter.alpha, filter.generator);
  if (filter.is_case_a()) {
    return {0.5 * (1.0 + f), 0.0};
  }
  // exp(j*acos(f)/2) = c + j*s by the half-angle formulas. Raising it to the
  // power beta instead of calling polar() keeps eighth-turn phases exact, so
  // analytic zeros of the Zak spectrum cancel exactly.
  const double c = std::sqrt(std::max(0.0, 0.5 * (1.0 + f)));
  const double s = std::sqrt(std::max(0.0, 0.5 * (1.0 - f)));
  const cplx half_turn{c, s};
  cplx phase{1.0, 0.0};
  for (int b = 0; b < filter.effective_beta(); ++b) {
    phase *= half_turn;
  }
  return c * phase;
}

cplx eval_H(double nu, const PrototypeFilter& filter, std::size_t K) {
  const double wrapped = nu - std::floor(nu + 0.5);
  const double a = std::abs(wrapped);
  const double kk = static_cast<double>(K);
  if (a >= 1.0 / kk) {
    return {0.0, 0.0};
  }
  const cplx h = eval_H_centered(2.0 * kk * a - 1.0, filter);
  return wrapped < 0.0 ? std::conj(h) : h;
}

CVector sample_gtilde(const GfdmParams& params, const PrototypeFilter& filter) {
  params.validate();
  filter.validate_for(params.K);
  const std::size_t N = params.N();
  const std::size_t M = params.M;
  const double lambda = params.lambda;
  const double mm = static_cast<double>(M);

  CVector g(N, cplx{0.0, 0.0});
  // First branch: 0 <= n < M - lambda. The centered coordinate of
  // nu = (n + lambda)/N is (2n - M + 2 lambda)/M; the mirrored branch uses
  // the exact negation so symmetric samples evaluate identically.
  for (std::size_t n = 0; n < M; ++n) {
    const double c = 2.0 * static_cast<double>(n) - mm;
    g[n] = eval_H_centered((c + 2.0 * lambda) / mm, filter);
  }
  // Second branch: N - M - lambda < n <= N - 1, nu = (N - n - lambda)/N.
  const std::size_t first = lambda > 0.0 ? N - M : N - M + 1;
  for (std::size_t n = first; n < N; ++n) {
    const double r = static_cast<double>(N - n);
    const double c = mm - 2.0 * r;
    g[n] = std::conj(eval_H_centered(-(c + 2.0 * lambda) / mm, filter));
  }
  return g;
}

CVector time_filter(std::span<const cplx> gtilde) { return tensor::ifft(gtilde); }

} // namespace gfdm
