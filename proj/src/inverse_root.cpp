#include "ctr/inverse_root.hpp"

#include <cmath>

#include "ctr/common.hpp"
#include "ctr/kernels.hpp"

namespace ctr {

namespace {

void check_symmetric(const Matrix& a) {
  if (a.rows != a.cols) throw ValidationError("inverse_pth_root: matrix not square");
  const double scale = std::max(1.0, max_abs(a));
  for (int i = 0; i < a.rows; ++i)
    for (int j = i + 1; j < a.cols; ++j)
      if (std::fabs(a.at(i, j) - a.at(j, i)) > 1e-9 * scale)
        throw ValidationError("inverse_pth_root: matrix not symmetric");
}

double max_abs_resid_identity(const Matrix& m) {
  double r = 0.0;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      r = std::max(r, std::fabs(m.at(i, j) - target));
    }
  return r;
}

Matrix square(const Matrix& a) { return matmul(a, a); }

}  // namespace

void sym_eigen(const Matrix& a, Matrix& q, std::vector<double>& eigenvalues) {
  const int n = a.rows;
  Matrix d = a;
  q = Matrix::identity(n);

  const int max_sweeps = 64;
  const double scale = std::max(1.0, max_abs(a));
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off = std::max(off, std::fabs(d.at(i, j)));
    if (off < 1e-14 * scale) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        const double apq = d.at(p, r);
        if (std::fabs(apq) < 1e-300) continue;
        const double app = d.at(p, p);
        const double aqq = d.at(r, r);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double dkp = d.at(k, p);
          const double dkq = d.at(k, r);
          d.at(k, p) = c * dkp - s * dkq;
          d.at(k, r) = s * dkp + c * dkq;
        }
        for (int k = 0; k < n; ++k) {
          const double dpk = d.at(p, k);
          const double dqk = d.at(r, k);
          d.at(p, k) = c * dpk - s * dqk;
          d.at(r, k) = s * dpk + c * dqk;
        }
        for (int k = 0; k < n; ++k) {
          const double qkp = q.at(k, p);
          const double qkq = q.at(k, r);
          q.at(k, p) = c * qkp - s * qkq;
          q.at(k, r) = s * qkp + c * qkq;
        }
      }
    }
  }
  eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) eigenvalues[i] = d.at(i, i);
}

InverseRootResult inverse_pth_root(const Matrix& a, int p, double eps, int max_iters,
                                   double tol) {
  check_symmetric(a);
  if (p != 2 && p != 4) throw ValidationError("inverse_pth_root: p must be 2 or 4");
  if (eps <= 0.0) throw ConfigError("inverse_pth_root: eps must be > 0");

  const int n = a.rows;
  Matrix damped = a;
  for (int i = 0; i < n; ++i) damped.at(i, i) += eps;

  // Gershgorin bound on the spectral norm; guarantees eigenvalues of M0 lie in
  // (0, (1+p)/2], the coupled iteration's convergence region.
  double bound = 0.0;
  for (int i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < n; ++j) row_sum += std::fabs(damped.at(i, j));
    bound = std::max(bound, row_sum);
  }
  if (bound <= 0.0) bound = eps;

  const double z = (1.0 + p) / (2.0 * bound);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = z * damped.at(i, j);
  Matrix x = Matrix::identity(n);
  const double x0 = std::pow(z, 1.0 / p);
  for (int i = 0; i < n; ++i) x.at(i, i) = x0;

  InverseRootResult out;
  out.residual = max_abs_resid_identity(m);
  int iter = 0;
  while (out.residual > tol && iter < max_iters) {
    Matrix t(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double id = (i == j) ? 1.0 : 0.0;
        t.at(i, j) = ((1.0 + p) * id - m.at(i, j)) / p;
      }
    Matrix tp = square(t);        // T^2
    if (p == 4) tp = square(tp);  // T^4
    m = matmul(tp, m);
    x = matmul(x, t);
    ++iter;
    const double res = max_abs_resid_identity(m);
    if (!std::isfinite(res) || res > 10.0 * (out.residual + 1.0)) {
      // diverged; force the fallback route
      out.residual = res;
      iter = max_iters;
      break;
    }
    out.residual = res;
  }
  out.iterations = iter;

  if (out.residual > tol) {
    Matrix q;
    std::vector<double> lam;
    sym_eigen(damped, q, lam);
    Matrix scaled(n, n);  // columns of Q scaled by lambda^(-1/p)
    for (int j = 0; j < n; ++j) {
      const double lj = std::max(lam[j], eps);
      const double f = std::pow(lj, -1.0 / p);
      for (int i = 0; i < n; ++i) scaled.at(i, j) = q.at(i, j) * f;
    }
    x = matmul(scaled, transpose(q));
    out.used_fallback = true;
  }

  // symmetrize against drift
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double s = 0.5 * (x.at(i, j) + x.at(j, i));
      x.at(i, j) = s;
      x.at(j, i) = s;
    }
  out.root = std::move(x);
  return out;
}

}  // namespace ctr
