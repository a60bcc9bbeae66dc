#pragma once

#include <cstddef>

// Data-parallel inner loops shared by the estimators and the network code.
// Every kernel has a scalar reference implementation and, when the build and
// the host CPU support it, an AVX2+FMA variant selected at runtime. The two
// variants are equivalence-tested against each other; counting kernels agree
// exactly, floating-point reductions to ~1 ulp per accumulation step.

namespace linfoot::kernels {

enum class isa { scalar, avx2 };

/// Instruction set the dispatcher currently resolves to. Honors the
/// LINFOOT_SIMD environment variable ("scalar" or "avx2") and any
/// thread-local force_isa() override.
isa active_isa();
const char* isa_name(isa i);

/// Thread-local override used by the equivalence tests. Passing avx2 on a
/// machine without AVX2 support falls back to scalar.
void force_isa(isa i);
void clear_forced_isa();

/// C[m,n] = alpha * op(A) * op(B) + beta * C, row-major with leading
/// dimensions lda/ldb/ldc. op transposes logically; no data is moved
/// for trans_a, trans_b packs a scratch transpose.
void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha,
          const double* a, int lda, const double* b, int ldb,
          double beta, double* c, int ldc);

/// x[r,c] += bias[c] for every row, then optionally relu in place.
void add_bias_relu(double* x, int rows, int cols, const double* bias, bool relu);

/// out[j] = max(|u[j]-ui|, |v[j]-vi|) for j in [0,n).
void cheby_distances(const double* u, const double* v, int n,
                     double ui, double vi, double* out);

/// #{ j in [0,n) : |x[j] - center| < radius }  (strict inequality).
int count_within(const double* x, int n, double center, double radius);

/// Mirror-reflected Epanechnikov axis factor at evaluation point t:
/// out[j] = sum over reflections r in {s[j], -s[j], 2-s[j]} of
///          0.75 * (1 - z^2) for z = (t - r)/h where |z| < 1, else 0.
void epan_mr_axis(const double* s, int n, double t, double h, double* out);

double dot(const double* x, const double* y, int n);
double sum(const double* x, int n);

namespace scalar {
void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha,
          const double* a, int lda, const double* b, int ldb,
          double beta, double* c, int ldc);
void add_bias_relu(double* x, int rows, int cols, const double* bias, bool relu);
void cheby_distances(const double* u, const double* v, int n,
                     double ui, double vi, double* out);
int count_within(const double* x, int n, double center, double radius);
void epan_mr_axis(const double* s, int n, double t, double h, double* out);
double dot(const double* x, const double* y, int n);
double sum(const double* x, int n);
} // namespace scalar

#if defined(LINFOOT_HAVE_AVX2)
namespace avx2 {
void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha,
          const double* a, int lda, const double* b, int ldb,
          double beta, double* c, int ldc);
void add_bias_relu(double* x, int rows, int cols, const double* bias, bool relu);
void cheby_distances(const double* u, const double* v, int n,
                     double ui, double vi, double* out);
int count_within(const double* x, int n, double center, double radius);
void epan_mr_axis(const double* s, int n, double t, double h, double* out);
double dot(const double* x, const double* y, int n);
double sum(const double* x, int n);
} // namespace avx2
#endif

} // namespace linfoot::kernels
