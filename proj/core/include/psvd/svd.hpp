// Copyright 2026 The psvd Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PSVD_SVD_HPP
#define PSVD_SVD_HPP

#include <cstddef>
#include <vector>

#include "psvd/matrix.hpp"

namespace psvd {

/// Thin SVD factors A = U * diag(sigma) * Vt with U (m x k), sigma (k,
/// non-negative, non-increasing) and Vt (k x n).
struct FactorTriple {
  Matrix u;
  std::vector<double> sigma;
  Matrix vt;

  std::size_t rank() const { return sigma.size(); }
};

/// Thin SVD via one-sided Jacobi rotations, k = min(m, n).
///
/// Deterministic: fixed cyclic rotation order, no data-dependent threading,
/// and a fixed sign convention (the largest-magnitude entry of every left
/// singular vector is non-negative, ties resolved by lowest row index), so
/// identical inputs produce bit-identical factors.
FactorTriple svd(const Matrix& a);

/// First k columns of U, first k sigmas, first k rows of Vt.
FactorTriple truncate(const FactorTriple& f, std::size_t k);

/// U_k * diag(sigma_k) * Vt_k.
Matrix reconstruct(const FactorTriple& f);

/// Best rank-k approximation of a (Eckart-Young optimal in Frobenius norm).
Matrix k_rank_approx(const Matrix& a, std::size_t k);

}  // namespace psvd

#endif
