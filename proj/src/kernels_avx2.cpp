#include "linfoot/kernels.hpp"

#if defined(LINFOOT_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <vector>

namespace linfoot::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// C[i, j0..j0+15] accumulated over k with A element broadcast.
// B must be row-major non-transposed (ldb stride).
inline void gemm_row_panel(const double* arow, bool trans_a, int i, int lda,
                           const double* b, int ldb, int k,
                           double alpha, double beta, double* crow, int j0, int jn) {
    // full 16-wide panels
    int j = j0;
    for (; j + 16 <= jn; j += 16) {
        __m256d acc0 = _mm256_setzero_pd();
        __m256d acc1 = _mm256_setzero_pd();
        __m256d acc2 = _mm256_setzero_pd();
        __m256d acc3 = _mm256_setzero_pd();
        for (int p = 0; p < k; ++p) {
            const double av = trans_a ? arow[p * lda + i] : arow[p];
            const __m256d va = _mm256_set1_pd(av);
            const double* brow = b + static_cast<std::ptrdiff_t>(p) * ldb + j;
            acc0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(brow + 0), acc0);
            acc1 = _mm256_fmadd_pd(va, _mm256_loadu_pd(brow + 4), acc1);
            acc2 = _mm256_fmadd_pd(va, _mm256_loadu_pd(brow + 8), acc2);
            acc3 = _mm256_fmadd_pd(va, _mm256_loadu_pd(brow + 12), acc3);
        }
        const __m256d valpha = _mm256_set1_pd(alpha);
        __m256d out0 = _mm256_mul_pd(valpha, acc0);
        __m256d out1 = _mm256_mul_pd(valpha, acc1);
        __m256d out2 = _mm256_mul_pd(valpha, acc2);
        __m256d out3 = _mm256_mul_pd(valpha, acc3);
        if (beta != 0.0) {
            const __m256d vbeta = _mm256_set1_pd(beta);
            out0 = _mm256_fmadd_pd(vbeta, _mm256_loadu_pd(crow + j + 0), out0);
            out1 = _mm256_fmadd_pd(vbeta, _mm256_loadu_pd(crow + j + 4), out1);
            out2 = _mm256_fmadd_pd(vbeta, _mm256_loadu_pd(crow + j + 8), out2);
            out3 = _mm256_fmadd_pd(vbeta, _mm256_loadu_pd(crow + j + 12), out3);
        }
        _mm256_storeu_pd(crow + j + 0, out0);
        _mm256_storeu_pd(crow + j + 4, out1);
        _mm256_storeu_pd(crow + j + 8, out2);
        _mm256_storeu_pd(crow + j + 12, out3);
    }
    for (; j + 4 <= jn; j += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (int p = 0; p < k; ++p) {
            const double av = trans_a ? arow[p * lda + i] : arow[p];
            acc = _mm256_fmadd_pd(_mm256_set1_pd(av),
                                  _mm256_loadu_pd(b + static_cast<std::ptrdiff_t>(p) * ldb + j),
                                  acc);
        }
        __m256d out = _mm256_mul_pd(_mm256_set1_pd(alpha), acc);
        if (beta != 0.0)
            out = _mm256_fmadd_pd(_mm256_set1_pd(beta), _mm256_loadu_pd(crow + j), out);
        _mm256_storeu_pd(crow + j, out);
    }
    for (; j < jn; ++j) {
        double acc = 0.0;
        for (int p = 0; p < k; ++p) {
            const double av = trans_a ? arow[p * lda + i] : arow[p];
            acc = std::fma(av, b[static_cast<std::ptrdiff_t>(p) * ldb + j], acc);
        }
        crow[j] = alpha * acc + (beta == 0.0 ? 0.0 : beta * crow[j]);
    }
}

} // namespace

void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha,
          const double* a, int lda, const double* b, int ldb,
          double beta, double* c, int ldc) {
    // trans_b is handled by packing B^T once; the row kernel wants
    // contiguous B rows indexed by p.
    thread_local std::vector<double> packed;
    const double* beff = b;
    int ldbeff = ldb;
    if (trans_b) {
        packed.resize(static_cast<size_t>(k) * n);
        for (int p = 0; p < k; ++p)
            for (int j = 0; j < n; ++j)
                packed[static_cast<size_t>(p) * n + j] = b[static_cast<std::ptrdiff_t>(j) * ldb + p];
        beff = packed.data();
        ldbeff = n;
    }
    for (int i = 0; i < m; ++i) {
        const double* arow = trans_a ? a : a + static_cast<std::ptrdiff_t>(i) * lda;
        gemm_row_panel(arow, trans_a, i, lda, beff, ldbeff, k, alpha, beta,
                       c + static_cast<std::ptrdiff_t>(i) * ldc, 0, n);
    }
}

void add_bias_relu(double* x, int rows, int cols, const double* bias, bool relu) {
    const __m256d zero = _mm256_setzero_pd();
    for (int i = 0; i < rows; ++i) {
        double* row = x + static_cast<std::ptrdiff_t>(i) * cols;
        int j = 0;
        for (; j + 4 <= cols; j += 4) {
            __m256d v = _mm256_loadu_pd(row + j);
            if (bias) v = _mm256_add_pd(v, _mm256_loadu_pd(bias + j));
            if (relu) v = _mm256_max_pd(v, zero);
            _mm256_storeu_pd(row + j, v);
        }
        for (; j < cols; ++j) {
            double v = row[j] + (bias ? bias[j] : 0.0);
            row[j] = (relu && v < 0.0) ? 0.0 : v;
        }
    }
}

void cheby_distances(const double* u, const double* v, int n,
                     double ui, double vi, double* out) {
    const __m256d vui = _mm256_set1_pd(ui);
    const __m256d vvi = _mm256_set1_pd(vi);
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    int j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d du = _mm256_and_pd(_mm256_sub_pd(_mm256_loadu_pd(u + j), vui), absmask);
        const __m256d dv = _mm256_and_pd(_mm256_sub_pd(_mm256_loadu_pd(v + j), vvi), absmask);
        _mm256_storeu_pd(out + j, _mm256_max_pd(du, dv));
    }
    for (; j < n; ++j) {
        const double du = std::fabs(u[j] - ui);
        const double dv = std::fabs(v[j] - vi);
        out[j] = du > dv ? du : dv;
    }
}

int count_within(const double* x, int n, double center, double radius) {
    const __m256d vc = _mm256_set1_pd(center);
    const __m256d vr = _mm256_set1_pd(radius);
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    int count = 0;
    int j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d d = _mm256_and_pd(_mm256_sub_pd(_mm256_loadu_pd(x + j), vc), absmask);
        const __m256d lt = _mm256_cmp_pd(d, vr, _CMP_LT_OQ);
        count += __builtin_popcount(static_cast<unsigned>(_mm256_movemask_pd(lt)));
    }
    for (; j < n; ++j) count += std::fabs(x[j] - center) < radius;
    return count;
}

void epan_mr_axis(const double* s, int n, double t, double h, double* out) {
    const double inv_h = 1.0 / h;
    const __m256d vinv = _mm256_set1_pd(inv_h);
    const __m256d vt = _mm256_set1_pd(t);
    const __m256d vt2 = _mm256_set1_pd(t - 2.0);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d c34 = _mm256_set1_pd(0.75);
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    int j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d sj = _mm256_loadu_pd(s + j);
        const __m256d z0 = _mm256_mul_pd(_mm256_sub_pd(vt, sj), vinv);
        const __m256d z1 = _mm256_mul_pd(_mm256_add_pd(vt, sj), vinv);
        const __m256d z2 = _mm256_mul_pd(_mm256_add_pd(vt2, sj), vinv);
        __m256d acc = _mm256_setzero_pd();
        for (const __m256d z : {z0, z1, z2}) {
            const __m256d inside = _mm256_cmp_pd(_mm256_and_pd(z, absmask), one, _CMP_LT_OQ);
            const __m256d val = _mm256_mul_pd(c34, _mm256_sub_pd(one, _mm256_mul_pd(z, z)));
            acc = _mm256_add_pd(acc, _mm256_and_pd(val, inside));
        }
        _mm256_storeu_pd(out + j, acc);
    }
    for (; j < n; ++j) {
        double acc = 0.0;
        const double z0 = (t - s[j]) * inv_h;
        const double z1 = (t + s[j]) * inv_h;
        const double z2 = (t - 2.0 + s[j]) * inv_h;
        if (std::fabs(z0) < 1.0) acc += 0.75 * (1.0 - z0 * z0);
        if (std::fabs(z1) < 1.0) acc += 0.75 * (1.0 - z1 * z1);
        if (std::fabs(z2) < 1.0) acc += 0.75 * (1.0 - z2 * z2);
        out[j] = acc;
    }
}

double dot(const double* x, const double* y, int n) {
    __m256d acc = _mm256_setzero_pd();
    int j = 0;
    for (; j + 4 <= n; j += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + j), _mm256_loadu_pd(y + j), acc);
    double r = hsum(acc);
    for (; j < n; ++j) r += x[j] * y[j];
    return r;
}

double sum(const double* x, int n) {
    __m256d acc = _mm256_setzero_pd();
    int j = 0;
    for (; j + 4 <= n; j += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + j));
    double r = hsum(acc);
    for (; j < n; ++j) r += x[j];
    return r;
}

} // namespace linfoot::kernels::avx2

#endif // LINFOOT_HAVE_AVX2
