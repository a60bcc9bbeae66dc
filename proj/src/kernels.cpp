#include "linfoot/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace linfoot::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(LINFOOT_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

isa detect() {
    if (const char* env = std::getenv("LINFOOT_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return isa::scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return isa::avx2;
    }
    return cpu_has_avx2() ? isa::avx2 : isa::scalar;
}

thread_local bool g_forced = false;
thread_local isa g_forced_isa = isa::scalar;

} // namespace

isa active_isa() {
    if (g_forced) return g_forced_isa;
    static const isa detected = detect();
    return detected;
}

const char* isa_name(isa i) {
    return i == isa::avx2 ? "avx2" : "scalar";
}

void force_isa(isa i) {
    if (i == isa::avx2 && !cpu_has_avx2()) i = isa::scalar;
    g_forced = true;
    g_forced_isa = i;
}

void clear_forced_isa() { g_forced = false; }

#if defined(LINFOOT_HAVE_AVX2)
#define LINFOOT_DISPATCH(fn, ...) \
    return active_isa() == isa::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__)
#else
#define LINFOOT_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha,
          const double* a, int lda, const double* b, int ldb,
          double beta, double* c, int ldc) {
    LINFOOT_DISPATCH(gemm, trans_a, trans_b, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

void add_bias_relu(double* x, int rows, int cols, const double* bias, bool relu) {
    LINFOOT_DISPATCH(add_bias_relu, x, rows, cols, bias, relu);
}

void cheby_distances(const double* u, const double* v, int n,
                     double ui, double vi, double* out) {
    LINFOOT_DISPATCH(cheby_distances, u, v, n, ui, vi, out);
}

int count_within(const double* x, int n, double center, double radius) {
    LINFOOT_DISPATCH(count_within, x, n, center, radius);
}

void epan_mr_axis(const double* s, int n, double t, double h, double* out) {
    LINFOOT_DISPATCH(epan_mr_axis, s, n, t, h, out);
}

double dot(const double* x, const double* y, int n) {
    LINFOOT_DISPATCH(dot, x, y, n);
}

double sum(const double* x, int n) {
    LINFOOT_DISPATCH(sum, x, n);
}

#undef LINFOOT_DISPATCH

} // namespace linfoot::kernels
