// NEON lane for aarch64. One float64x2_t holds one complex double.

#if defined(__aarch64__)

#include <arm_neon.h>

#include "qps/kernels.hpp"

namespace qps::kernels {

namespace {

const float64x2_t kSignIm = {-1.0, 1.0};

// acc += a * b for one complex double held in a float64x2_t [re, im].
inline float64x2_t cplx_fma(float64x2_t acc, double ar, double ai, float64x2_t vb) {
    float64x2_t t1 = vfmaq_n_f64(acc, vb, ar);          // +ar*br, +ar*bi
    float64x2_t vb_sw = vextq_f64(vb, vb, 1);           // [bi, br]
    return vfmaq_f64(t1, vmulq_n_f64(vb_sw, ai), kSignIm);  // -ai*bi, +ai*br
}

}  // namespace

void matmul_neon(const cd* a, const cd* b, cd* c, std::size_t n) {
    double* cr = reinterpret_cast<double*>(c);
    const double* br = reinterpret_cast<const double*>(b);
    for (std::size_t i = 0; i < n * n; ++i) c[i] = cd{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const cd* arow = a + i * n;
        double* crow = cr + 2 * i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cd aik = arow[k];
            const double* brow = br + 2 * k * n;
            for (std::size_t j = 0; j < n; ++j) {
                float64x2_t vb = vld1q_f64(brow + 2 * j);
                float64x2_t acc = vld1q_f64(crow + 2 * j);
                vst1q_f64(crow + 2 * j, cplx_fma(acc, aik.real(), aik.imag(), vb));
            }
        }
    }
}

void axpy_neon(cd* y, cd alpha, const cd* x, std::size_t n) {
    double* yr = reinterpret_cast<double*>(y);
    const double* xr = reinterpret_cast<const double*>(x);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t vx = vld1q_f64(xr + 2 * i);
        float64x2_t acc = vld1q_f64(yr + 2 * i);
        vst1q_f64(yr + 2 * i, cplx_fma(acc, alpha.real(), alpha.imag(), vx));
    }
}

}  // namespace qps::kernels

#endif  // aarch64
