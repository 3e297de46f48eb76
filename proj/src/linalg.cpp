// Copyright (c) 2026 The rpf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "rpf/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "rpf/rng.hpp"

namespace rpf {

namespace {

void require_finite(const ComplexMatrix& a, const char* who) {
  if (!a.allFinite()) {
    throw std::invalid_argument(std::string(who) + ": non-finite entries");
  }
}

double power_iteration_norm(const ComplexMatrix& a) {
  constexpr double kTol = 1e-12;
  constexpr int kMaxIters = 10000;
  const Eigen::Index dim = a.cols();
  Eigen::VectorXcd v = Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(double(dim)));
  double prev = 0.0;
  for (int it = 0; it < kMaxIters; ++it) {
    Eigen::VectorXcd w = a * v;
    const double s = w.norm();
    if (s == 0.0) return 0.0;
    v = a.adjoint() * w;
    const double z = v.norm();
    if (z == 0.0) return s;
    v /= z;
    if (it > 0 && std::abs(s - prev) <= kTol * s) return s;
    prev = s;
  }
  return prev;
}

}  // namespace

ComplexMatrix herm_exp(const ComplexMatrix& a, std::complex<double> z) {
  require_finite(a, "herm_exp");
  if (a.rows() != a.cols()) throw std::invalid_argument("herm_exp: matrix not square");
  const double scale = a.norm();  // Frobenius
  const double asym = (a - a.adjoint()).norm();
  if (asym > 1e-10 * std::max(scale, 1e-300)) {
    throw std::invalid_argument("herm_exp: matrix not Hermitian to 1e-10");
  }
  ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
  const Eigen::VectorXd& lam = es.eigenvalues();
  Eigen::VectorXcd phases(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) phases[i] = std::exp(z * lam[i]);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double spectral_norm(const ComplexMatrix& a) {
  require_finite(a, "spectral_norm");
  if (a.size() == 0) return 0.0;
  if (a.rows() <= 256 && a.cols() <= 256) {
    Eigen::BDCSVD<ComplexMatrix> svd(a);
    return svd.singularValues()(0);
  }
  return power_iteration_norm(a);
}

ComplexMatrix product_chain(const std::vector<ComplexMatrix>& factors) {
  if (factors.empty()) throw std::invalid_argument("product_chain: empty factor list");
  ComplexMatrix acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i].rows() != acc.cols() || factors[i].rows() != factors[i].cols()) {
      throw std::invalid_argument("product_chain: dimension mismatch");
    }
    acc = acc * factors[i];
  }
  return acc;
}

namespace {

// 2x2 gate on two row slabs of length m, interleaved re/im layout.
void gate2_rows(double* __restrict p0, double* __restrict p1, const double* __restrict gr,
                const double* __restrict gi, Eigen::Index m) {
  for (Eigen::Index j = 0; j < m; ++j) {
    const double x0r = p0[2 * j], x0i = p0[2 * j + 1];
    const double x1r = p1[2 * j], x1i = p1[2 * j + 1];
    p0[2 * j] = gr[0] * x0r - gi[0] * x0i + gr[1] * x1r - gi[1] * x1i;
    p0[2 * j + 1] = gr[0] * x0i + gi[0] * x0r + gr[1] * x1i + gi[1] * x1r;
    p1[2 * j] = gr[2] * x0r - gi[2] * x0i + gr[3] * x1r - gi[3] * x1i;
    p1[2 * j + 1] = gr[2] * x0i + gi[2] * x0r + gr[3] * x1i + gi[3] * x1r;
  }
}

// 4x4 gate on four row slabs of length m.
void gate4_rows(double* __restrict p0, double* __restrict p1, double* __restrict p2,
                double* __restrict p3, const double* __restrict gr, const double* __restrict gi,
                Eigen::Index m) {
  for (Eigen::Index j = 0; j < m; ++j) {
    const double x0r = p0[2 * j], x0i = p0[2 * j + 1];
    const double x1r = p1[2 * j], x1i = p1[2 * j + 1];
    const double x2r = p2[2 * j], x2i = p2[2 * j + 1];
    const double x3r = p3[2 * j], x3i = p3[2 * j + 1];
    // y_i = sum_j g(i,j) x_j expanded into real arithmetic
    p0[2 * j] = gr[0] * x0r - gi[0] * x0i + gr[1] * x1r - gi[1] * x1i + gr[2] * x2r -
                gi[2] * x2i + gr[3] * x3r - gi[3] * x3i;
    p0[2 * j + 1] = gr[0] * x0i + gi[0] * x0r + gr[1] * x1i + gi[1] * x1r + gr[2] * x2i +
                    gi[2] * x2r + gr[3] * x3i + gi[3] * x3r;
    p1[2 * j] = gr[4] * x0r - gi[4] * x0i + gr[5] * x1r - gi[5] * x1i + gr[6] * x2r -
                gi[6] * x2i + gr[7] * x3r - gi[7] * x3i;
    p1[2 * j + 1] = gr[4] * x0i + gi[4] * x0r + gr[5] * x1i + gi[5] * x1r + gr[6] * x2i +
                    gi[6] * x2r + gr[7] * x3i + gi[7] * x3r;
    p2[2 * j] = gr[8] * x0r - gi[8] * x0i + gr[9] * x1r - gi[9] * x1i + gr[10] * x2r -
                gi[10] * x2i + gr[11] * x3r - gi[11] * x3i;
    p2[2 * j + 1] = gr[8] * x0i + gi[8] * x0r + gr[9] * x1i + gi[9] * x1r + gr[10] * x2i +
                    gi[10] * x2r + gr[11] * x3i + gi[11] * x3r;
    p3[2 * j] = gr[12] * x0r - gi[12] * x0i + gr[13] * x1r - gi[13] * x1i + gr[14] * x2r -
                gi[14] * x2i + gr[15] * x3r - gi[15] * x3i;
    p3[2 * j + 1] = gr[12] * x0i + gi[12] * x0r + gr[13] * x1i + gi[13] * x1r + gr[14] * x2i +
                    gi[14] * x2r + gr[15] * x3i + gi[15] * x3r;
  }
}

void unpack2(const Eigen::Matrix2cd& g, double* gr, double* gi) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      gr[i * 2 + j] = g(i, j).real();
      gi[i * 2 + j] = g(i, j).imag();
    }
}

void unpack4(const Eigen::Matrix4cd& g, double* gr, double* gi) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      gr[i * 4 + j] = g(i, j).real();
      gi[i * 4 + j] = g(i, j).imag();
    }
}

}  // namespace

void apply_one_site_left(RowMatrix& a, int bit, const Eigen::Matrix2cd& g) {
  const Eigen::Index dim = a.rows();
  const Eigen::Index mb = Eigen::Index(1) << bit;
  double gr[4], gi[4];
  unpack2(g, gr, gi);
  auto* data = reinterpret_cast<double*>(a.data());
  for (Eigen::Index base = 0; base < dim; ++base) {
    if (base & mb) continue;
    gate2_rows(data + 2 * base * dim, data + 2 * (base | mb) * dim, gr, gi, dim);
  }
}

void apply_two_site_left(RowMatrix& a, int bit_hi, int bit_lo, const Eigen::Matrix4cd& g) {
  const Eigen::Index dim = a.rows();
  const Eigen::Index ma = Eigen::Index(1) << bit_hi;
  const Eigen::Index mb = Eigen::Index(1) << bit_lo;
  double gr[16], gi[16];
  unpack4(g, gr, gi);
  auto* data = reinterpret_cast<double*>(a.data());
  for (Eigen::Index base = 0; base < dim; ++base) {
    if (base & (ma | mb)) continue;
    gate4_rows(data + 2 * base * dim, data + 2 * (base | mb) * dim, data + 2 * (base | ma) * dim,
               data + 2 * ((base | ma) | mb) * dim, gr, gi, dim);
  }
}

void apply_one_site_vec(Eigen::VectorXcd& v, int bit, const Eigen::Matrix2cd& g) {
  const Eigen::Index dim = v.size();
  const Eigen::Index mb = Eigen::Index(1) << bit;
  const std::complex<double> g00 = g(0, 0), g01 = g(0, 1), g10 = g(1, 0), g11 = g(1, 1);
  for (Eigen::Index base = 0; base < dim; ++base) {
    if (base & mb) continue;
    const std::complex<double> x0 = v[base], x1 = v[base | mb];
    v[base] = g00 * x0 + g01 * x1;
    v[base | mb] = g10 * x0 + g11 * x1;
  }
}

void apply_two_site_vec(Eigen::VectorXcd& v, int bit_hi, int bit_lo, const Eigen::Matrix4cd& g) {
  const Eigen::Index dim = v.size();
  const Eigen::Index ma = Eigen::Index(1) << bit_hi;
  const Eigen::Index mb = Eigen::Index(1) << bit_lo;
  for (Eigen::Index base = 0; base < dim; ++base) {
    if (base & (ma | mb)) continue;
    const std::complex<double> x0 = v[base], x1 = v[base | mb], x2 = v[base | ma],
                               x3 = v[(base | ma) | mb];
    v[base] = g(0, 0) * x0 + g(0, 1) * x1 + g(0, 2) * x2 + g(0, 3) * x3;
    v[base | mb] = g(1, 0) * x0 + g(1, 1) * x1 + g(1, 2) * x2 + g(1, 3) * x3;
    v[base | ma] = g(2, 0) * x0 + g(2, 1) * x1 + g(2, 2) * x2 + g(2, 3) * x3;
    v[(base | ma) | mb] = g(3, 0) * x0 + g(3, 1) * x1 + g(3, 2) * x2 + g(3, 3) * x3;
  }
}

double sigma_max(const LinearOperator& op, const SigmaMaxOptions& opts) {
  const Eigen::Index dim = op.dim;
  if (dim <= 0) throw std::invalid_argument("sigma_max: empty operator");

  Rng64 rng(opts.seed);
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v[i] = std::complex<double>(rng.next_unit() - 0.5, rng.next_unit() - 0.5);
  }
  v.normalize();

  const int max_iters = static_cast<int>(std::min<Eigen::Index>(opts.max_iters, dim));
  std::vector<Eigen::VectorXcd> vs, us;
  vs.reserve(max_iters + 1);
  us.reserve(max_iters + 1);
  vs.push_back(v);

  Eigen::VectorXcd work(dim);
  std::vector<double> alpha, beta;

  op.apply(vs[0], work);
  double a0 = work.norm();
  if (a0 <= 1e-300) return 0.0;
  alpha.push_back(a0);
  us.push_back(work / a0);

  // sigma_max of the upper-bidiagonal B (diag alpha, superdiag beta) equals
  // sqrt(lambda_max of the tridiagonal B^T B); found by Sturm bisection.
  auto bidiag_sigma = [&]() {
    const int k = static_cast<int>(alpha.size());
    std::vector<double> d(k), e(std::max(0, k - 1));
    for (int i = 0; i < k; ++i) {
      d[i] = alpha[i] * alpha[i] + (i > 0 ? beta[i - 1] * beta[i - 1] : 0.0);
    }
    for (int i = 0; i + 1 < k; ++i) e[i] = alpha[i] * beta[i];
    // count of eigenvalues of T below x (LDL^T sign recurrence)
    auto count_below = [&](double x) {
      int cnt = 0;
      double q = d[0] - x;
      if (q < 0) ++cnt;
      for (int i = 1; i < k; ++i) {
        const double denom = (q == 0.0) ? 1e-300 : q;
        q = d[i] - x - e[i - 1] * e[i - 1] / denom;
        if (q < 0) ++cnt;
      }
      return cnt;
    };
    double hi = 0.0;
    for (int i = 0; i < k; ++i) {
      hi = std::max(hi, d[i] + (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < k ? std::abs(e[i]) : 0.0));
    }
    double lo = 0.0;
    for (int it = 0; it < 80 && hi - lo > 1e-16 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(mid) < k) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return std::sqrt(0.5 * (lo + hi));
  };

  double sigma = alpha[0];
  int stationary = 0;
  for (int it = 0; it < max_iters; ++it) {
    // r = A^dag u_k - alpha_k v_k, reorthogonalized against all previous v
    op.apply_adj(us.back(), work);
    work -= alpha.back() * vs.back();
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : vs) work -= q.dot(work) * q;
    const double b = work.norm();
    if (b <= 1e-14 * sigma) break;  // invariant subspace found
    beta.push_back(b);
    vs.push_back(work / b);

    // p = A v_{k+1} - beta_k u_k, reorthogonalized against all previous u
    op.apply(vs.back(), work);
    work -= beta.back() * us.back();
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : us) work -= q.dot(work) * q;
    const double a = work.norm();
    if (a <= 1e-14 * sigma) {
      sigma = std::max(sigma, bidiag_sigma());
      break;
    }
    alpha.push_back(a);
    us.push_back(work / a);

    const double next = bidiag_sigma();
    if (next <= sigma * (1.0 + opts.rel_tol)) {
      if (++stationary >= 2) {
        sigma = std::max(sigma, next);
        break;
      }
    } else {
      stationary = 0;
    }
    sigma = std::max(sigma, next);
  }
  return sigma;
}

}  // namespace rpf
