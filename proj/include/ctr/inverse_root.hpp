#pragma once

#include "ctr/matrix.hpp"

namespace ctr {

struct InverseRootResult {
  Matrix root;          // ~ (a + eps*I)^(-1/p), symmetric
  int iterations = 0;   // Newton iterations run
  double residual = 0;  // max|M - I| at termination, M = X^p (a + eps*I)
  bool used_fallback = false;  // eigendecomposition route was taken
};

// Coupled Newton iteration for X = (a + eps*I)^(-1/p), p in {2, 4}.
//
// With A' = a + eps*I and z = (1+p) / (2*B), B the Gershgorin row-sum bound on
// the spectral norm of A':
//   M0 = z*A',  X0 = z^(1/p)*I
//   T  = ((1+p)*I - M) / p
//   M <- T^p * M,  X <- X * T
// terminating when max|M - I| < tol (M tracks X^p * A'). All arithmetic is
// double precision. If the iteration fails to reach tol within max_iters, the
// result falls back to a Jacobi eigendecomposition Q diag(l^(-1/p)) Q^T and
// used_fallback is set.
//
// Throws ValidationError for non-square or non-symmetric input or p outside
// {2, 4}; ConfigError for eps <= 0.
InverseRootResult inverse_pth_root(const Matrix& a, int p, double eps, int max_iters = 100,
                                   double tol = 1e-10);

// Cyclic Jacobi eigendecomposition of a symmetric matrix: a = Q diag(l) Q^T.
// Columns of q hold eigenvectors; eigenvalues are unsorted (pivot order).
void sym_eigen(const Matrix& a, Matrix& q, std::vector<double>& eigenvalues);

}  // namespace ctr
