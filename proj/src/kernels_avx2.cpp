// AVX2+FMA kernel lane. This translation unit is compiled with
// -mavx2 -mfma and must only be reached through the dispatch table after a
// runtime CPU check. Reductions use two accumulators, so summation order
// differs from the scalar lane by roundoff.

#include "isogauss/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace isogauss::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swap = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swap));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, r);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_avx2(double alpha, double* x, std::size_t n) {
    const __m256d av = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= alpha;
}

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += x[i];
    return acc;
}

double sumsq_avx2(const double* x, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d a = _mm256_loadu_pd(x + i);
        const __m256d b = _mm256_loadu_pd(x + i + 4);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
        acc1 = _mm256_fmadd_pd(b, b, acc1);
    }
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(x + i);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += x[i] * x[i];
    return acc;
}

double sumabs_avx2(const double* x, std::size_t n) {
    // Clear the sign bit instead of branching.
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL));
    __m256d acc0 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_add_pd(acc0, _mm256_and_pd(mask, _mm256_loadu_pd(x + i)));
    double acc = hsum(acc0);
    for (; i < n; ++i) acc += x[i] < 0.0 ? -x[i] : x[i];
    return acc;
}

void relu_avx2(const double* x, double* y, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_max_pd(zero, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_grad_avx2(const double* x, const double* gy, double* gx, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d m = _mm256_cmp_pd(_mm256_loadu_pd(x + i), zero, _CMP_GT_OQ);
        const __m256d g = _mm256_and_pd(m, _mm256_loadu_pd(gy + i));
        _mm256_storeu_pd(gx + i, _mm256_add_pd(_mm256_loadu_pd(gx + i), g));
    }
    for (; i < n; ++i)
        if (x[i] > 0.0) gx[i] += gy[i];
}

// Row update crow[0..n) += av * brow[0..n), the shared inner loop of the
// nn and tn cases.
inline void fma_row(double av, const double* brow, double* crow, std::size_t n) {
    const __m256d a = _mm256_set1_pd(av);
    std::size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        _mm256_storeu_pd(crow + j,
                         _mm256_fmadd_pd(a, _mm256_loadu_pd(brow + j), _mm256_loadu_pd(crow + j)));
        _mm256_storeu_pd(crow + j + 4,
                         _mm256_fmadd_pd(a, _mm256_loadu_pd(brow + j + 4), _mm256_loadu_pd(crow + j + 4)));
    }
    for (; j + 4 <= n; j += 4)
        _mm256_storeu_pd(crow + j,
                         _mm256_fmadd_pd(a, _mm256_loadu_pd(brow + j), _mm256_loadu_pd(crow + j)));
    for (; j < n; ++j) crow[j] += av * brow[j];
}

void gemm_avx2(bool trans_a, bool trans_b,
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
            scale_avx2(beta, crow, n);
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
                crow[j] += alpha * dot_avx2(arow, b + j * ldb, k);
        }
    } else {
        // Doubly strided access; no hot caller, keep it simple.
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

const Ops* avx2() {
    static const Ops ops = {
        "avx2",
        dot_avx2,
        axpy_avx2,
        scale_avx2,
        sum_avx2,
        sumsq_avx2,
        sumabs_avx2,
        relu_avx2,
        relu_grad_avx2,
        gemm_avx2,
    };
    return &ops;
}

}  // namespace isogauss::kernels

#else

namespace isogauss::kernels {
const Ops* avx2() { return nullptr; }
}  // namespace isogauss::kernels

#endif
