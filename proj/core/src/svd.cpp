// Copyright 2026 The psvd Authors
// SPDX-License-Identifier: Apache-2.0

#include "psvd/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace psvd {
namespace {

constexpr double kRotationTol = 1e-12;  // relative off-diagonal threshold
constexpr int kMaxSweeps = 30;

// One-sided (Hestenes) Jacobi on the columns of W (column-major, m x n,
// m >= n). On return the columns of W are mutually orthogonal, W = U * S,
// and V accumulates the applied rotations so that A = W * V^T.
void jacobi_orthogonalize(std::vector<double>& w, std::vector<double>& v, std::size_t m,
                          std::size_t n) {
  std::fill(v.begin(), v.end(), 0.0);
  for (std::size_t j = 0; j < n; ++j) v[j * n + j] = 1.0;

  std::vector<double> sq(n);  // squared column norms, refreshed per sweep
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    for (std::size_t j = 0; j < n; ++j) {
      const double* cj = &w[j * m];
      double s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += cj[i] * cj[i];
      sq[j] = s;
    }
    std::size_t rotations = 0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double a = sq[p];
        const double b = sq[q];
        if (a == 0.0 || b == 0.0) continue;
        double* cp = &w[p * m];
        double* cq = &w[q * m];
        double c = 0.0;
        for (std::size_t i = 0; i < m; ++i) c += cp[i] * cq[i];
        if (std::abs(c) <= kRotationTol * std::sqrt(a * b)) continue;
        ++rotations;
        const double zeta = (b - a) / (2.0 * c);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double wp = cp[i];
          const double wq = cq[i];
          cp[i] = cs * wp - sn * wq;
          cq[i] = sn * wp + cs * wq;
        }
        double* vp = &v[p * n];
        double* vq = &v[q * n];
        for (std::size_t i = 0; i < n; ++i) {
          const double xp = vp[i];
          const double xq = vq[i];
          vp[i] = cs * xp - sn * xq;
          vq[i] = sn * xp + cs * xq;
        }
        sq[p] = a - t * c;
        sq[q] = b + t * c;
      }
    }
    if (rotations == 0) break;
  }
}

// Fill U columns whose singular value vanished with unit vectors orthogonal
// to all other columns. Candidates are canonical basis vectors taken in
// index order; two rounds of Gram-Schmidt keep the residual at roundoff.
void complete_basis(Matrix& u, const std::vector<bool>& null_col) {
  const std::size_t m = u.rows();
  const std::size_t k = u.cols();
  std::size_t candidate = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (!null_col[j]) continue;
    for (; candidate < m; ++candidate) {
      std::vector<double> e(m, 0.0);
      e[candidate] = 1.0;
      for (int round = 0; round < 2; ++round) {
        for (std::size_t col = 0; col < k; ++col) {
          if (col == j || (null_col[col] && col > j)) continue;
          double dot = 0.0;
          for (std::size_t i = 0; i < m; ++i) dot += e[i] * u(i, col);
          for (std::size_t i = 0; i < m; ++i) e[i] -= dot * u(i, col);
        }
      }
      double norm = 0.0;
      for (double x : e) norm += x * x;
      norm = std::sqrt(norm);
      if (norm > 0.5) {
        for (std::size_t i = 0; i < m; ++i) u(i, j) = e[i] / norm;
        ++candidate;
        break;
      }
    }
  }
}

// Largest-magnitude entry of each left singular vector made non-negative;
// ties resolved by lowest row index. Vt rows flip with their U columns so
// the product is unchanged.
void fix_signs(Matrix& u, Matrix& vt) {
  for (std::size_t j = 0; j < u.cols(); ++j) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < u.rows(); ++i) {
      const double mag = std::abs(u(i, j));
      if (mag > best) {
        best = mag;
        arg = i;
      }
    }
    if (u(arg, j) < 0.0) {
      for (std::size_t i = 0; i < u.rows(); ++i) u(i, j) = -u(i, j);
      for (std::size_t i = 0; i < vt.cols(); ++i) vt(j, i) = -vt(j, i);
    }
  }
}

FactorTriple svd_tall(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  std::vector<double> w(m * n);  // column-major copy of a
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) w[j * m + i] = a(i, j);
  std::vector<double> v(n * n);
  jacobi_orthogonalize(w, v, m, n);

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    const double* cj = &w[j * m];
    for (std::size_t i = 0; i < m; ++i) s += cj[i] * cj[i];
    sigma[j] = std::sqrt(s);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (sigma[x] != sigma[y]) return sigma[x] > sigma[y];
    return x < y;
  });

  FactorTriple f;
  f.u = Matrix(m, n);
  f.vt = Matrix(n, n);
  f.sigma.resize(n);
  std::vector<bool> null_col(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    const double s = sigma[src];
    f.sigma[j] = s;
    if (s == 0.0) {
      null_col[j] = true;
    } else {
      for (std::size_t i = 0; i < m; ++i) f.u(i, j) = w[src * m + i] / s;
    }
    for (std::size_t i = 0; i < n; ++i) f.vt(j, i) = v[src * n + i];
  }
  complete_basis(f.u, null_col);
  fix_signs(f.u, f.vt);
  return f;
}

}  // namespace

FactorTriple svd(const Matrix& a) {
  if (a.empty()) throw Error(errc::invalid_input, "svd: empty matrix");
  if (!a.all_finite()) throw Error(errc::invalid_input, "svd: non-finite input");

  if (a.rows() >= a.cols()) return svd_tall(a);

  // Wide case: factor the transpose and swap the roles of U and V.
  FactorTriple t = svd_tall(transpose(a));
  FactorTriple f;
  f.sigma = std::move(t.sigma);
  f.u = transpose(t.vt);
  f.vt = transpose(t.u);
  // Re-apply the sign convention in terms of the new U.
  fix_signs(f.u, f.vt);
  return f;
}

FactorTriple truncate(const FactorTriple& f, std::size_t k) {
  if (k < 1 || k > f.rank())
    throw Error(errc::invalid_rank,
                "truncate: rank " + std::to_string(k) + " outside [1, " +
                    std::to_string(f.rank()) + "]");
  FactorTriple t;
  t.u = Matrix(f.u.rows(), k);
  for (std::size_t i = 0; i < f.u.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) t.u(i, j) = f.u(i, j);
  t.sigma.assign(f.sigma.begin(), f.sigma.begin() + k);
  t.vt = Matrix(k, f.vt.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < f.vt.cols(); ++j) t.vt(i, j) = f.vt(i, j);
  return t;
}

Matrix reconstruct(const FactorTriple& f) {
  const std::size_t m = f.u.rows();
  const std::size_t n = f.vt.cols();
  const std::size_t k = f.rank();
  Matrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < k; ++r) {
      const double us = f.u(i, r) * f.sigma[r];
      if (us == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) a(i, j) += us * f.vt(r, j);
    }
  }
  return a;
}

Matrix k_rank_approx(const Matrix& a, std::size_t k) {
  const std::size_t kmax = std::min(a.rows(), a.cols());
  if (k < 1 || k > kmax)
    throw Error(errc::invalid_rank, "k_rank_approx: rank " + std::to_string(k) +
                                        " outside [1, " + std::to_string(kmax) + "]");
  return reconstruct(truncate(svd(a), k));
}

}  // namespace psvd
