// Scalar reference kernels. These define the semantics the SIMD lanes are
// tested against; keep them simple and obviously correct.

#include "isogauss/kernels.hpp"

namespace isogauss::kernels {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double alpha, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

double sum_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double sumsq_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
    return acc;
}

double sumabs_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] < 0.0 ? -x[i] : x[i];
    return acc;
}

void relu_scalar(const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_grad_scalar(const double* x, const double* gy, double* gx, std::size_t n) {
    // Subgradient at exactly 0 is 0.
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] > 0.0) gx[i] += gy[i];
}

void gemm_scalar(bool trans_a, bool trans_b,
                 std::size_t m, std::size_t n, std::size_t k,
                 double alpha,
                 const double* a, std::size_t lda,
                 const double* b, std::size_t ldb,
                 double beta,
                 double* c, std::size_t ldc) {
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = c + i * ldc;
        if (beta == 0.0) {
            for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
        } else if (beta != 1.0) {
            for (std::size_t j = 0; j < n; ++j) crow[j] *= beta;
        }
    }
    if (alpha == 0.0 || m == 0 || n == 0 || k == 0) return;

    if (!trans_a && !trans_b) {
        // c[i][j] += a[i][p] * b[p][j]
        for (std::size_t i = 0; i < m; ++i) {
            double* crow = c + i * ldc;
            for (std::size_t p = 0; p < k; ++p) {
                const double av = alpha * a[i * lda + p];
                const double* brow = b + p * ldb;
                for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
            }
        }
    } else if (trans_a && !trans_b) {
        // c[i][j] += a[p][i] * b[p][j]
        for (std::size_t p = 0; p < k; ++p) {
            const double* arow = a + p * lda;
            const double* brow = b + p * ldb;
            for (std::size_t i = 0; i < m; ++i) {
                const double av = alpha * arow[i];
                double* crow = c + i * ldc;
                for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
            }
        }
    } else if (!trans_a && trans_b) {
        // c[i][j] += a[i][p] * b[j][p]
        for (std::size_t i = 0; i < m; ++i) {
            const double* arow = a + i * lda;
            double* crow = c + i * ldc;
            for (std::size_t j = 0; j < n; ++j)
                crow[j] += alpha * dot_scalar(arow, b + j * ldb, k);
        }
    } else {
        // c[i][j] += a[p][i] * b[j][p]
        for (std::size_t i = 0; i < m; ++i) {
            double* crow = c + i * ldc;
            for (std::size_t j = 0; j < n; ++j) {
                const double* brow = b + j * ldb;
                double acc = 0.0;
                for (std::size_t p = 0; p < k; ++p) acc += a[p * lda + i] * brow[p];
                crow[j] += alpha * acc;
            }
        }
    }
}

}  // namespace

const Ops& scalar() {
    static const Ops ops = {
        "scalar",
        dot_scalar,
        axpy_scalar,
        scale_scalar,
        sum_scalar,
        sumsq_scalar,
        sumabs_scalar,
        relu_scalar,
        relu_grad_scalar,
        gemm_scalar,
    };
    return ops;
}

}  // namespace isogauss::kernels
