// AVX2+FMA lane. Compiled with -mavx2 -mfma for this translation unit only;
// callers reach it through the runtime dispatcher.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "qps/kernels.hpp"

namespace qps::kernels {

namespace {

// fused y[j..j+1] += a * b[j..j+1] for two interleaved complex doubles:
// re' = yr + ar*br - ai*bi,  im' = yi + ar*bi + ai*br
inline __m256d cplx2_fma(__m256d acc, __m256d va_re, __m256d va_im, __m256d vb) {
    __m256d t1 = _mm256_fmadd_pd(va_re, vb, acc);
    __m256d vb_sw = _mm256_permute_pd(vb, 0x5);  // swap re/im within each pair
    __m256d t2 = _mm256_mul_pd(va_im, vb_sw);
    return _mm256_addsub_pd(t1, t2);
}

}  // namespace

void matmul_avx2(const cd* a, const cd* b, cd* c, std::size_t n) {
    double* cr = reinterpret_cast<double*>(c);
    const double* br = reinterpret_cast<const double*>(b);
    for (std::size_t i = 0; i < n * n; ++i) c[i] = cd{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const cd* arow = a + i * n;
        double* crow = cr + 2 * i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cd aik = arow[k];
            const double* brow = br + 2 * k * n;
            __m256d va_re = _mm256_set1_pd(aik.real());
            __m256d va_im = _mm256_set1_pd(aik.imag());
            std::size_t j = 0;
            for (; j + 2 <= n; j += 2) {
                __m256d vb = _mm256_loadu_pd(brow + 2 * j);
                __m256d acc = _mm256_loadu_pd(crow + 2 * j);
                _mm256_storeu_pd(crow + 2 * j, cplx2_fma(acc, va_re, va_im, vb));
            }
            for (; j < n; ++j) {  // odd-n tail
                cd* cj = reinterpret_cast<cd*>(crow) + j;
                *cj += aik * (reinterpret_cast<const cd*>(brow))[j];
            }
        }
    }
}

void axpy_avx2(cd* y, cd alpha, const cd* x, std::size_t n) {
    __m256d va_re = _mm256_set1_pd(alpha.real());
    __m256d va_im = _mm256_set1_pd(alpha.imag());
    double* yr = reinterpret_cast<double*>(y);
    const double* xr = reinterpret_cast<const double*>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(xr + 2 * i);
        __m256d acc = _mm256_loadu_pd(yr + 2 * i);
        _mm256_storeu_pd(yr + 2 * i, cplx2_fma(acc, va_re, va_im, vx));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace qps::kernels

#endif  // x86-64
