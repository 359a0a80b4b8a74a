#pragma once

#include <cstddef>

// Data-parallel inner loops behind every dense operation in the library.
// Each kernel has a scalar reference implementation plus SIMD variants
// (AVX2+FMA on x86-64, NEON on aarch64) selected once at startup from CPU
// capabilities. The ISOGAUSS_KERNELS environment variable (scalar|avx2|neon)
// overrides detection, which is how the equivalence tests pin a lane.
//
// SIMD lanes reorder reductions, so results may differ from the scalar lane
// by normal floating-point roundoff. Equivalence is tested to tight relative
// tolerances, not bit-exactness. Within one process the selected lane is
// fixed, so repeated runs of the same configuration are bit-reproducible.

namespace isogauss::kernels {

// c = alpha * op(a) * op(b) + beta * c, all row-major.
// op(a) is m x k, op(b) is k x n, c is m x n; ld* are row strides.
using GemmFn = void (*)(bool trans_a, bool trans_b,
                        std::size_t m, std::size_t n, std::size_t k,
                        double alpha,
                        const double* a, std::size_t lda,
                        const double* b, std::size_t ldb,
                        double beta,
                        double* c, std::size_t ldc);

struct Ops {
    const char* name;

    double (*dot)(const double* x, const double* y, std::size_t n);
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);  // y += alpha*x
    void (*scale)(double alpha, double* x, std::size_t n);                  // x *= alpha
    double (*sum)(const double* x, std::size_t n);
    double (*sumsq)(const double* x, std::size_t n);
    double (*sumabs)(const double* x, std::size_t n);
    void (*relu)(const double* x, double* y, std::size_t n);                // y = max(x, 0)
    void (*relu_grad)(const double* x, const double* gy, double* gx, std::size_t n);  // gx += gy * [x > 0]
    GemmFn gemm;
};

// Reference lane, always available.
const Ops& scalar();

// SIMD lanes; null when the CPU (or build target) lacks them.
const Ops* avx2();
const Ops* neon();

// Lane selected at startup (env override, else best available).
const Ops& active();

}  // namespace isogauss::kernels
