#pragma once

// Low-level arithmetic kernels for dense complex matrices (row-major, square).
//
// Each kernel has a scalar reference implementation plus SIMD variants
// (AVX2+FMA on x86-64, NEON on aarch64) selected once at startup from CPU
// capabilities. The scalar path is the semantic reference; the SIMD paths are
// equivalence-tested against it.

#include <complex>
#include <cstddef>

namespace qps::kernels {

using cd = std::complex<double>;

// C = A * B, n x n row-major. C must not alias A or B.
using matmul_fn = void (*)(const cd* a, const cd* b, cd* c, std::size_t n);
// y += alpha * x over n complex entries.
using axpy_fn = void (*)(cd* y, cd alpha, const cd* x, std::size_t n);

void matmul_scalar(const cd* a, const cd* b, cd* c, std::size_t n);
void axpy_scalar(cd* y, cd alpha, const cd* x, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
void matmul_avx2(const cd* a, const cd* b, cd* c, std::size_t n);
void axpy_avx2(cd* y, cd alpha, const cd* x, std::size_t n);
#endif
#if defined(__aarch64__)
void matmul_neon(const cd* a, const cd* b, cd* c, std::size_t n);
void axpy_neon(cd* y, cd alpha, const cd* x, std::size_t n);
#endif

// Active (dispatched) kernels.
matmul_fn active_matmul();
axpy_fn active_axpy();

// Name of the selected variant: "scalar", "avx2" or "neon".
const char* kernel_name();

}  // namespace qps::kernels
