#include "linfoot/kernels.hpp"

#include <cmath>

namespace linfoot::kernels::scalar {

void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha,
          const double* a, int lda, const double* b, int ldb,
          double beta, double* c, int ldc) {
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int p = 0; p < k; ++p) {
                const double av = trans_a ? a[p * lda + i] : a[i * lda + p];
                const double bv = trans_b ? b[j * ldb + p] : b[p * ldb + j];
                acc += av * bv;
            }
            double& out = c[i * ldc + j];
            out = alpha * acc + (beta == 0.0 ? 0.0 : beta * out);
        }
    }
}

void add_bias_relu(double* x, int rows, int cols, const double* bias, bool relu) {
    for (int i = 0; i < rows; ++i) {
        double* row = x + static_cast<std::ptrdiff_t>(i) * cols;
        for (int j = 0; j < cols; ++j) {
            double v = row[j] + (bias ? bias[j] : 0.0);
            row[j] = (relu && v < 0.0) ? 0.0 : v;
        }
    }
}

void cheby_distances(const double* u, const double* v, int n,
                     double ui, double vi, double* out) {
    for (int j = 0; j < n; ++j) {
        const double du = std::fabs(u[j] - ui);
        const double dv = std::fabs(v[j] - vi);
        out[j] = du > dv ? du : dv;
    }
}

int count_within(const double* x, int n, double center, double radius) {
    int count = 0;
    for (int j = 0; j < n; ++j) {
        count += std::fabs(x[j] - center) < radius;
    }
    return count;
}

void epan_mr_axis(const double* s, int n, double t, double h, double* out) {
    const double inv_h = 1.0 / h;
    for (int j = 0; j < n; ++j) {
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
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += x[j] * y[j];
    return acc;
}

double sum(const double* x, int n) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += x[j];
    return acc;
}

} // namespace linfoot::kernels::scalar
