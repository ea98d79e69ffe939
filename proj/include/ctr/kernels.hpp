#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ctr/matrix.hpp"

namespace ctr {

// Active index ranges along one dimension. A full (unmasked) dimension is the
// single range {0, n}; a NAS-masked embedding concat is one prefix range per
// feature segment. Kernel loops walk ranges in order, so the accumulation
// order per output cell is fixed regardless of masking or thread count.
struct DimRange {
  int off = 0;
  int len = 0;
};
using Ranges = std::vector<DimRange>;
using RangeSpan = std::span<const DimRange>;

inline Ranges full_range(int n) { return {{0, n}}; }
inline Ranges prefix_range(int n) { return {{0, n}}; }

inline int ranges_total(RangeSpan r) {
  int t = 0;
  for (const auto& d : r) t += d.len;
  return t;
}

// Counts multiply-adds (and embedding gather writes) actually executed by the
// kernels: incremented with inner-loop trip counts, not analytic formulas.
struct MacCounter {
  long long macs = 0;
};

// All kernels zero the cells of C outside the masked output region, so the
// output is fully defined. Inner accumulation is ascending within each range,
// ranges in order, giving bitwise-identical results for any thread count.

// C[i,j] = sum_{k in inner} A[i,k] * B[k,j]   for all rows i, j in out_cols.
void gemm_nn(const Matrix& a, const Matrix& b, RangeSpan inner, RangeSpan out_cols, Matrix& c,
             MacCounter* counter = nullptr);

// C[i,j] = sum_{k in inner} A[i,k] * B[j,k]   for all rows i, j in out_cols.
void gemm_nt(const Matrix& a, const Matrix& b, RangeSpan inner, RangeSpan out_cols, Matrix& c,
             MacCounter* counter = nullptr);

// C[i,j] = sum_b A[b,i] * B[b,j]              for i in out_rows, j in out_cols.
void gemm_tn(const Matrix& a, const Matrix& b, RangeSpan out_rows, RangeSpan out_cols, Matrix& c,
             MacCounter* counter = nullptr);

// Exact-symmetric products for optimizer statistics: upper triangle computed,
// mirrored, so the result is symmetric bit-for-bit.
void syrk_nt(const Matrix& g, Matrix& out);  // out (rows x rows) = G * G^T
void syrk_tn(const Matrix& g, Matrix& out);  // out (cols x cols) = G^T * G

// Serial reference implementations (naive loops, no OpenMP). Kept for tests
// and the kernel benchmark; they must match the parallel kernels bitwise.
namespace ref {
void gemm_nn(const Matrix& a, const Matrix& b, RangeSpan inner, RangeSpan out_cols, Matrix& c,
             MacCounter* counter = nullptr);
void gemm_nt(const Matrix& a, const Matrix& b, RangeSpan inner, RangeSpan out_cols, Matrix& c,
             MacCounter* counter = nullptr);
void gemm_tn(const Matrix& a, const Matrix& b, RangeSpan out_rows, RangeSpan out_cols, Matrix& c,
             MacCounter* counter = nullptr);
void syrk_nt(const Matrix& g, Matrix& out);
void syrk_tn(const Matrix& g, Matrix& out);
}  // namespace ref

// Standard full product c = a*b; dimension mismatch throws ConfigError.
Matrix matmul(const Matrix& a, const Matrix& b);

}  // namespace ctr
