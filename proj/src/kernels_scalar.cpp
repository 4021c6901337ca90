#include "qps/kernels.hpp"

namespace qps::kernels {

void matmul_scalar(const cd* a, const cd* b, cd* c, std::size_t n) {
    for (std::size_t i = 0; i < n * n; ++i) c[i] = cd{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const cd* arow = a + i * n;
        cd* crow = c + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cd aik = arow[k];
            const cd* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

void axpy_scalar(cd* y, cd alpha, const cd* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace qps::kernels
