#pragma once

// Prototype filters sampled in frequency with a fractional shift lambda.
//
// A filter is described by its frequency response H(nu) on one subcarrier
// pair. On [0, 1/K] the response is built from a real, decreasing function f
// with f(nu) = -f(1/K - nu):
//
//   case A (ISI-free without matched filter):  H = (1 + f) / 2
//   case B (ISI-free after matched filter):    H = exp(j*phi) * sqrt((1 + f) / 2)
//
// For negative frequencies H(-nu) = conj(H(nu)); H vanishes for
// 1/K <= |nu| <= 1/2. f itself is obtained from an antisymmetric generator
// f^a on the transition band of width alpha/K centered at 1/(2K).

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "gfdm/types.hpp"

namespace gfdm {

enum class GeneratorKind {
  RaisedCosine, ///< f^a(x) = -sin(pi*x/2), the RC/RRC family
  Linear,       ///< f^a(x) = -x
};

/// Antisymmetric generator f^a on [-1, 1], decreasing from 1 to -1.
struct GeneratorFunction {
  GeneratorKind kind = GeneratorKind::RaisedCosine;

  double operator()(double x) const;
  std::string_view name() const;

  static GeneratorFunction from_name(std::string_view name);
};

enum class FilterFamily { CaseA, CaseB, Xia };

std::string_view family_name(FilterFamily family);

struct PrototypeFilter {
  FilterFamily family = FilterFamily::CaseA;
  /// Phase class for case B, phi(nu) = -phi(1/K - nu) + beta*pi/2.
  int beta = 0;
  double alpha = 0.5;
  GeneratorFunction generator{};

  static PrototypeFilter rc(double alpha);
  static PrototypeFilter rrc(double alpha);
  static PrototypeFilter xia(double alpha);
  static PrototypeFilter case_b(double alpha, int beta,
                                GeneratorFunction gen = GeneratorFunction{});

  /// Phase class actually realized. Xia's phase acos(f)/2 satisfies the case B
  /// phase relation with beta = 1.
  int effective_beta() const;
  bool is_case_a() const { return family == FilterFamily::CaseA; }

  /// Throws ConfigError on alpha outside (0, 1] or beta outside 0..3.
  void validate() const;
  /// Additionally checks constraints that depend on the subcarrier count.
  void validate_for(std::size_t K) const;

  /// Short label such as "rc", "rrc", "xia" or "caseB(beta=2,linear)".
  std::string label() const;
};

struct GfdmParams {
  std::size_t K = 4;  ///< subcarriers
  std::size_t M = 2;  ///< subsymbols
  double lambda = 0.0; ///< sampling shift in [0, 1)

  std::size_t N() const { return K * M; }

  /// Throws ConfigError unless K >= 4, M >= 2 and lambda in [0, 1).
  void validate() const;
};

/// f(nu) for nu in [0, 1/K].
double eval_f(double nu, double alpha, std::size_t K, const GeneratorFunction& gen);

/// f expressed on the centered coordinate u = 2*K*nu - 1 in [-1, 1].
double eval_f_centered(double u, double alpha, const GeneratorFunction& gen);

/// H on its defining interval, again as a function of u = 2*K*nu - 1.
cplx eval_H_centered(double u, const PrototypeFilter& filter);

/// H(nu) for any nu, periodic with period 1, Hermitian and band-limited.
cplx eval_H(double nu, const PrototypeFilter& filter, std::size_t K);

/// Frequency samples g~(lambda), length N. At most 2M entries are nonzero.
CVector sample_gtilde(const GfdmParams& params, const PrototypeFilter& filter);

/// g = W_N^H g~ / N, so that W_N g = g~.
CVector time_filter(std::span<const cplx> gtilde);

} // namespace gfdm
