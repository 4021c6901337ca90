#include "qps/kernels.hpp"

namespace qps::kernels {

namespace {

struct Selection {
    matmul_fn matmul;
    axpy_fn axpy;
    const char* name;
};

Selection select() {
#if defined(__aarch64__)
    return {matmul_neon, axpy_neon, "neon"};
#elif defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return {matmul_avx2, axpy_avx2, "avx2"};
    return {matmul_scalar, axpy_scalar, "scalar"};
#else
    return {matmul_scalar, axpy_scalar, "scalar"};
#endif
}

const Selection& selection() {
    static const Selection s = select();
    return s;
}

}  // namespace

matmul_fn active_matmul() { return selection().matmul; }
axpy_fn active_axpy() { return selection().axpy; }
const char* kernel_name() { return selection().name; }

}  // namespace qps::kernels
