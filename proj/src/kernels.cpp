#include "ctr/kernels.hpp"

#include <atomic>
#include <cstring>

#include "ctr/common.hpp"

namespace ctr {

namespace {
// Below this many multiply-adds the OpenMP fork/join overhead dominates.
constexpr long long kOmpThreshold = 64 * 1024;
}  // namespace

void gemm_nn(const Matrix& a, const Matrix& b, std::span<const DimRange> inner, int n_act,
             Matrix& c, MacCounter* counter) {
  const int rows = a.rows;
  const int k_total = ranges_total(inner);
  const long long work = static_cast<long long>(rows) * k_total * n_act;

#pragma omp parallel for schedule(static) if (work > kOmpThreshold)
  for (int i = 0; i < rows; ++i) {
    double* crow = c.row(i);
    std::memset(crow, 0, sizeof(double) * c.cols);
    const double* arow = a.row(i);
    for (const auto& r : inner) {
      for (int k = r.off; k < r.off + r.len; ++k) {
        const double av = arow[k];
        const double* brow = b.row(k);
        for (int j = 0; j < n_act; ++j) crow[j] += av * brow[j];
      }
    }
  }
  if (counter) counter->macs += work;
}

void gemm_nt(const Matrix& a, const Matrix& b, int k_act, std::span<const DimRange> out,
             Matrix& c, MacCounter* counter) {
  const int rows = a.rows;
  const int out_total = ranges_total(out);
  const long long work = static_cast<long long>(rows) * k_act * out_total;

#pragma omp parallel for schedule(static) if (work > kOmpThreshold)
  for (int i = 0; i < rows; ++i) {
    double* crow = c.row(i);
    std::memset(crow, 0, sizeof(double) * c.cols);
    const double* arow = a.row(i);
    for (const auto& r : out) {
      for (int j = r.off; j < r.off + r.len; ++j) {
        const double* brow = b.row(j);
        double s = 0.0;
        for (int k = 0; k < k_act; ++k) s += arow[k] * brow[k];
        crow[j] = s;
      }
    }
  }
  if (counter) counter->macs += work;
}

void gemm_tn(const Matrix& a, const Matrix& b, std::span<const DimRange> out_rows, int n_act,
             Matrix& c, MacCounter* counter) {
  const int batch = a.rows;
  const int out_total = ranges_total(out_rows);
  const long long work = static_cast<long long>(batch) * out_total * n_act;

  c.fill(0.0);
  // Collect active row indices so the parallel loop is a flat index space.
  std::vector<int> active;
  active.reserve(out_total);
  for (const auto& r : out_rows)
    for (int i = r.off; i < r.off + r.len; ++i) active.push_back(i);

  const int n_active = static_cast<int>(active.size());
#pragma omp parallel for schedule(static) if (work > kOmpThreshold)
  for (int ii = 0; ii < n_active; ++ii) {
    const int i = active[ii];
    double* crow = c.row(i);
    for (int bi = 0; bi < batch; ++bi) {
      const double av = a.at(bi, i);
      const double* brow = b.row(bi);
      for (int j = 0; j < n_act; ++j) crow[j] += av * brow[j];
    }
  }
  if (counter) counter->macs += work;
}

void syrk_nt(const Matrix& g, Matrix& out) {
  const int n = g.rows;
  const long long work = static_cast<long long>(n) * (n + 1) / 2 * g.cols;
#pragma omp parallel for schedule(static) if (work > kOmpThreshold)
  for (int i = 0; i < n; ++i) {
    const double* gi = g.row(i);
    for (int j = i; j < n; ++j) {
      const double* gj = g.row(j);
      double s = 0.0;
      for (int k = 0; k < g.cols; ++k) s += gi[k] * gj[k];
      out.at(i, j) = s;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) out.at(i, j) = out.at(j, i);
}

void syrk_tn(const Matrix& g, Matrix& out) {
  const int n = g.cols;
  const long long work = static_cast<long long>(n) * (n + 1) / 2 * g.rows;
#pragma omp parallel for schedule(static) if (work > kOmpThreshold)
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int b = 0; b < g.rows; ++b) s += g.at(b, i) * g.at(b, j);
      out.at(i, j) = s;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) out.at(i, j) = out.at(j, i);
}

namespace ref {

void gemm_nn(const Matrix& a, const Matrix& b, std::span<const DimRange> inner, int n_act,
             Matrix& c, MacCounter* counter) {
  long long macs = 0;
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < c.cols; ++j) c.at(i, j) = 0.0;
    for (int j = 0; j < n_act; ++j) {
      double s = 0.0;
      for (const auto& r : inner)
        for (int k = r.off; k < r.off + r.len; ++k) {
          s += a.at(i, k) * b.at(k, j);
          ++macs;
        }
      c.at(i, j) = s;
    }
  }
  if (counter) counter->macs += macs;
}

void gemm_nt(const Matrix& a, const Matrix& b, int k_act, std::span<const DimRange> out,
             Matrix& c, MacCounter* counter) {
  long long macs = 0;
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < c.cols; ++j) c.at(i, j) = 0.0;
    for (const auto& r : out)
      for (int j = r.off; j < r.off + r.len; ++j) {
        double s = 0.0;
        for (int k = 0; k < k_act; ++k) {
          s += a.at(i, k) * b.at(j, k);
          ++macs;
        }
        c.at(i, j) = s;
      }
  }
  if (counter) counter->macs += macs;
}

void gemm_tn(const Matrix& a, const Matrix& b, std::span<const DimRange> out_rows, int n_act,
             Matrix& c, MacCounter* counter) {
  long long macs = 0;
  c.fill(0.0);
  for (const auto& r : out_rows)
    for (int i = r.off; i < r.off + r.len; ++i)
      for (int j = 0; j < n_act; ++j) {
        double s = 0.0;
        for (int bi = 0; bi < a.rows; ++bi) {
          s += a.at(bi, i) * b.at(bi, j);
          ++macs;
        }
        c.at(i, j) = s;
      }
  if (counter) counter->macs += macs;
}

void syrk_nt(const Matrix& g, Matrix& out) {
  for (int i = 0; i < g.rows; ++i)
    for (int j = i; j < g.rows; ++j) {
      double s = 0.0;
      for (int k = 0; k < g.cols; ++k) s += g.at(i, k) * g.at(j, k);
      out.at(i, j) = s;
      out.at(j, i) = s;
    }
}

void syrk_tn(const Matrix& g, Matrix& out) {
  for (int i = 0; i < g.cols; ++i)
    for (int j = i; j < g.cols; ++j) {
      double s = 0.0;
      for (int b = 0; b < g.rows; ++b) s += g.at(b, i) * g.at(b, j);
      out.at(i, j) = s;
      out.at(j, i) = s;
    }
}

}  // namespace ref

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows)
    throw ConfigError("matmul: dimension mismatch " + std::to_string(a.rows) + "x" +
                      std::to_string(a.cols) + " * " + std::to_string(b.rows) + "x" +
                      std::to_string(b.cols));
  Matrix c(a.rows, b.cols);
  Ranges inner = full_range(a.cols);
  gemm_nn(a, b, inner, b.cols, c);
  return c;
}

}  // namespace ctr
