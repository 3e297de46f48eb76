// Copyright (c) 2026 The rpf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace rpf {

using ComplexMatrix = Eigen::MatrixXcd;

/// Row-major storage for unitary accumulators. Left-multiplication by a
/// local gate mixes rows, and row-major keeps each touched row contiguous.
using RowMatrix =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// exp(z * A) for Hermitian A via eigendecomposition A = U D U^dag.
/// Rejects non-finite entries and matrices that are not Hermitian to
/// within 1e-10 relative.
ComplexMatrix herm_exp(const ComplexMatrix& a, std::complex<double> z);

/// Largest singular value. Full SVD for dim <= 256; power iteration on
/// A^dag A (relative tolerance 1e-12, at most 1e4 iterations) above.
double spectral_norm(const ComplexMatrix& a);

/// factors[0] * factors[1] * ... * factors[m-1], first element leftmost,
/// accumulated left to right. Rejects empty input and dimension mismatch.
ComplexMatrix product_chain(const std::vector<ComplexMatrix>& factors);

// In-place left multiplication a <- G a by a gate acting on one or two
// index bits of the row index. `bit_hi` > `bit_lo`; the 4x4 gate is in the
// local basis 2*(bit_hi value) + (bit_lo value).
void apply_one_site_left(RowMatrix& a, int bit, const Eigen::Matrix2cd& g);
void apply_two_site_left(RowMatrix& a, int bit_hi, int bit_lo, const Eigen::Matrix4cd& g);

// Same gates applied to a column vector, v <- G v.
void apply_one_site_vec(Eigen::VectorXcd& v, int bit, const Eigen::Matrix2cd& g);
void apply_two_site_vec(Eigen::VectorXcd& v, int bit_hi, int bit_lo, const Eigen::Matrix4cd& g);

/// Matrix-free operator for norm estimation.
struct LinearOperator {
  Eigen::Index dim = 0;
  std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)> apply;      // y = A x
  std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)> apply_adj;  // y = A^dag x
};

struct SigmaMaxOptions {
  double rel_tol = 1e-8;
  int max_iters = 400;
  std::uint64_t seed = 0x9d2c5680u;  // start-vector stream
};

/// Largest singular value of an implicit operator by Golub-Kahan-Lanczos
/// bidiagonalization with full reorthogonalization. Deterministic for a
/// fixed seed. The estimate converges to sigma_max from below; iteration
/// stops once the estimate is stationary to rel_tol.
double sigma_max(const LinearOperator& op, const SigmaMaxOptions& opts = {});

}  // namespace rpf
