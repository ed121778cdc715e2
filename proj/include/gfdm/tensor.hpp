#pragma once

// Structured linear-algebra primitives: vectorization, stride permutations,
// DFT/FFT, Kronecker-block unitaries, discrete Zak transform and the
// diagonalization of block-circulant matrices with diagonal blocks.
//
// Conventions:
//   vec_{L,Q}(X)  stacks the columns of an L x Q matrix, vec[i + j*L] = X(i, j).
//   W_N           unnormalized DFT matrix, [W_N]_{i,j} = exp(-j*2*pi*i*j/N).
//   U_{L,Q}       (1/sqrt(Q)) I_L (x) W_Q, i.e. Q-point DFTs on L contiguous blocks.
//   Pi_{L,Q}      permutation with vec(X^T) = Pi_{L,Q} vec(X) for X of shape L x Q.

#include <cstddef>
#include <span>

#include "gfdm/types.hpp"

namespace gfdm::tensor {

/// exp(j*2*pi*num/den). Quarter turns are returned exactly.
cplx unit_root(long long num, long long den);

bool is_power_of_two(std::size_t n);

// ---------------------------------------------------------------------------
// Vectorization

CVector vec(const CMatrix& x);
CMatrix unvec(std::span<const cplx> x, std::size_t rows, std::size_t cols);

// ---------------------------------------------------------------------------
// Stride permutation

/// Index map of Pi_{L,Q}: output position i*Q + j takes input position j*L + i.
struct StridePermutation {
  std::size_t L = 1;
  std::size_t Q = 1;

  std::size_t size() const { return L * Q; }

  /// Input index feeding output index `out`.
  std::size_t source(std::size_t out) const { return (out % Q) * L + out / Q; }

  StridePermutation inverse() const { return {Q, L}; }

  CVector apply(std::span<const cplx> x) const;
  void apply(std::span<const cplx> x, std::span<cplx> out) const;

  /// Materialized permutation matrix (oracle use only).
  CMatrix dense() const;
};

CVector apply_stride_permutation(std::span<const cplx> x, std::size_t L,
                                 std::size_t Q);

// ---------------------------------------------------------------------------
// DFT

CMatrix dft_matrix(std::size_t n);

/// Precomputed DFT of a fixed length. Radix-2 for powers of two, direct
/// summation otherwise. Immutable after construction, so a plan can be shared
/// between threads.
class DftPlan {
public:
  explicit DftPlan(std::size_t n);

  std::size_t size() const { return n_; }
  bool radix2() const { return radix2_; }

  /// In place x <- W_n x.
  void forward(std::span<cplx> x) const;
  /// In place x <- W_n^H x (no 1/n factor).
  void backward(std::span<cplx> x) const;

private:
  void radix2_pass(std::span<cplx> x, bool inverse) const;
  void direct_pass(std::span<cplx> x, bool inverse) const;

  std::size_t n_;
  bool radix2_;
  // roots_[i] = exp(-j*2*pi*i/n)
  std::vector<cplx> roots_;
  std::vector<std::size_t> bitrev_;
};

/// W_N x.
CVector fft(std::span<const cplx> x);
/// W_N^H x / N, so ifft(fft(x)) = x.
CVector ifft(std::span<const cplx> x);

// ---------------------------------------------------------------------------
// Kronecker-block unitary U_{L,Q}

CMatrix u_matrix(std::size_t L, std::size_t Q);

/// x <- U_{L,Q} x using L Q-point FFTs. `plan` must have size Q.
void apply_u(std::span<cplx> x, std::size_t L, const DftPlan& plan);
/// x <- U_{L,Q}^H x.
void apply_u_adjoint(std::span<cplx> x, std::size_t L, const DftPlan& plan);

// ---------------------------------------------------------------------------
// Discrete Zak transform

/// Z_{Q,L}(x) = W_Q V_{Q,L}(x), V_{Q,L}(x) = unvec_{L,Q}(x)^T. Shape Q x L,
/// entry (p, l) = sum_q exp(-j*2*pi*p*q/Q) x[l + q*L].
CMatrix dzt(std::span<const cplx> x, std::size_t Q, std::size_t L);

// ---------------------------------------------------------------------------
// Block-circulant matrices with diagonal blocks

/// LQ x LQ matrix whose L x L block (i, j) is diag(V(:, <i-j>_Q)).
CMatrix block_circulant_build(const CMatrix& v);

/// S = Pi_{L,Q}^T U_{L,Q}^H diag(lambda) U_{L,Q} Pi_{L,Q}.
struct BlockCirculantFactors {
  StridePermutation perm;
  CVector lambda; // vec(W_Q V^T)

  std::size_t L() const { return perm.L; }
  std::size_t Q() const { return perm.Q; }

  /// S x evaluated through the factors in O(LQ log Q).
  CVector apply(std::span<const cplx> x) const;
  /// Dense product of the factors (oracle use only).
  CMatrix reconstruct() const;
};

BlockCirculantFactors block_circulant_factorize(const CMatrix& v);

} // namespace gfdm::tensor
