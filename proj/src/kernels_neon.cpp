// NEON kernel lane for aarch64, where 128-bit float64 vectors are baseline.
// Mirrors the AVX2 lane at half the vector width.

#include "isogauss/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace isogauss::kernels {
namespace {

double dot_neon(const double* x, const double* y, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
    }
    for (; i + 2 <= n; i += 2)
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
    const float64x2_t av = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), av, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_neon(double alpha, double* x, std::size_t n) {
    const float64x2_t av = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(x + i, vmulq_f64(av, vld1q_f64(x + i)));
    for (; i < n; ++i) x[i] *= alpha;
}

double sum_neon(const double* x, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vaddq_f64(acc0, vld1q_f64(x + i));
        acc1 = vaddq_f64(acc1, vld1q_f64(x + i + 2));
    }
    for (; i + 2 <= n; i += 2) acc0 = vaddq_f64(acc0, vld1q_f64(x + i));
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) acc += x[i];
    return acc;
}

double sumsq_neon(const double* x, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t v = vld1q_f64(x + i);
        acc0 = vfmaq_f64(acc0, v, v);
    }
    double acc = vaddvq_f64(acc0);
    for (; i < n; ++i) acc += x[i] * x[i];
    return acc;
}

double sumabs_neon(const double* x, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc0 = vaddq_f64(acc0, vabsq_f64(vld1q_f64(x + i)));
    double acc = vaddvq_f64(acc0);
    for (; i < n; ++i) acc += x[i] < 0.0 ? -x[i] : x[i];
    return acc;
}

void relu_neon(const double* x, double* y, std::size_t n) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vmaxq_f64(zero, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_grad_neon(const double* x, const double* gy, double* gx, std::size_t n) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t m = vcgtq_f64(vld1q_f64(x + i), zero);
        const float64x2_t g = vreinterpretq_f64_u64(
            vandq_u64(m, vreinterpretq_u64_f64(vld1q_f64(gy + i))));
        vst1q_f64(gx + i, vaddq_f64(vld1q_f64(gx + i), g));
    }
    for (; i < n; ++i)
        if (x[i] > 0.0) gx[i] += gy[i];
}

inline void fma_row(double av, const double* brow, double* crow, std::size_t n) {
    const float64x2_t a = vdupq_n_f64(av);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        vst1q_f64(crow + j, vfmaq_f64(vld1q_f64(crow + j), a, vld1q_f64(brow + j)));
        vst1q_f64(crow + j + 2, vfmaq_f64(vld1q_f64(crow + j + 2), a, vld1q_f64(brow + j + 2)));
    }
    for (; j + 2 <= n; j += 2)
        vst1q_f64(crow + j, vfmaq_f64(vld1q_f64(crow + j), a, vld1q_f64(brow + j)));
    for (; j < n; ++j) crow[j] += av * brow[j];
}

void gemm_neon(bool trans_a, bool trans_b,
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
            scale_neon(beta, crow, n);
        }
    }
    if (alpha == 0.0 || m == 0 || n == 0 || k == 0) return;

    if (!trans_a && !trans_b) {
        for (std::size_t i = 0; i < m; ++i) {
            double* crow = c + i * ldc;
            const double* arow = a + i * lda;
            for (std::size_t p = 0; p < k; ++p)
                fma_row(alpha * arow[p], b + p * ldb, crow, n);
        }
    } else if (trans_a && !trans_b) {
        for (std::size_t p = 0; p < k; ++p) {
            const double* arow = a + p * lda;
            const double* brow = b + p * ldb;
            for (std::size_t i = 0; i < m; ++i)
                fma_row(alpha * arow[i], brow, c + i * ldc, n);
        }
    } else if (!trans_a && trans_b) {
        for (std::size_t i = 0; i < m; ++i) {
            const double* arow = a + i * lda;
            double* crow = c + i * ldc;
            for (std::size_t j = 0; j < n; ++j)
                crow[j] += alpha * dot_neon(arow, b + j * ldb, k);
        }
    } else {
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

const Ops* neon() {
    static const Ops ops = {
        "neon",
        dot_neon,
        axpy_neon,
        scale_neon,
        sum_neon,
        sumsq_neon,
        sumabs_neon,
        relu_neon,
        relu_grad_neon,
        gemm_neon,
    };
    return &ops;
}

}  // namespace isogauss::kernels

#else

namespace isogauss::kernels {
const Ops* neon() { return nullptr; }
}  // namespace isogauss::kernels

#endif
