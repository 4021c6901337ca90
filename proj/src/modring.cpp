#include "qps/modring.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qps::modring {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

int64_t mod_reduce(int64_t a, int64_t d) {
    int64_t r = a % d;
    return r < 0 ? r + d : r;
}

int64_t mod_inverse(int64_t a, int64_t d) {
    if (d <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
    a = mod_reduce(a, d);
    // extended Euclid
    int64_t old_r = a, r = d, old_s = 1, s = 0;
    while (r != 0) {
        const int64_t q = old_r / r;
        int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw std::invalid_argument("mod_inverse: gcd(" + std::to_string(a) + ", " +
                                    std::to_string(d) + ") = " + std::to_string(old_r) +
                                    " != 1");
    return mod_reduce(old_s, d);
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

int64_t mult_order(int64_t a, int64_t d) {
    a = mod_reduce(a, d);
    if (std::gcd(a, d) != 1) throw std::invalid_argument("mult_order: gcd != 1");
    int64_t x = a;
    for (int64_t k = 1; k <= d; ++k) {
        if (x == 1) return k;
        x = mod_reduce(x * a, d);
    }
    throw std::logic_error("mult_order: no order found");
}

int64_t primitive_root(int64_t d) {
    if (!is_prime(d) || d == 2)
        throw std::invalid_argument("primitive_root: modulus must be an odd prime");
    for (int64_t g = 2; g < d; ++g)
        if (mult_order(g, d) == d - 1) return g;
    throw std::logic_error("primitive_root: none found");
}

cd gauss_sum(int64_t m, int64_t d) {
    if (d < 2) throw std::invalid_argument("gauss_sum: d >= 2 required");
    const double g0 = 2.0 * kPi / static_cast<double>(d);
    cd acc{0.0, 0.0};
    for (int64_t n = 0; n < d; ++n) {
        const int64_t e = mod_reduce(m * n % d * n, d);
        acc += std::polar(1.0, g0 * static_cast<double>(e));
    }
    return acc / std::sqrt(static_cast<double>(d));
}

SL2Elem::SL2Elem(int64_t d_, int64_t s1_, int64_t t1_, int64_t s2_, int64_t t2_)
    : d(d_),
      s1(mod_reduce(s1_, d_)),
      t1(mod_reduce(t1_, d_)),
      s2(mod_reduce(s2_, d_)),
      t2(mod_reduce(t2_, d_)) {
    if (d < 2) throw std::invalid_argument("SL2Elem: modulus must be >= 2");
    if (mod_reduce(s1 * t2 - t1 * s2, d) != 1)
        throw std::invalid_argument("SL2Elem: determinant != 1 (mod d)");
}

std::pair<int64_t, int64_t> SL2Elem::act(int64_t m1, int64_t m2) const {
    return {mod_reduce(s1 * m1 + t1 * m2, d), mod_reduce(s2 * m1 + t2 * m2, d)};
}

std::pair<int64_t, int64_t> SL2Elem::act_inv(int64_t m1, int64_t m2) const {
    return {mod_reduce(t2 * m1 - t1 * m2, d), mod_reduce(-s2 * m1 + s1 * m2, d)};
}

bool SL2Elem::is_identity() const { return s1 == 1 && t1 == 0 && s2 == 0 && t2 == 1; }

SL2Elem sl2_identity(int64_t d) { return SL2Elem(d, 1, 0, 0, 1); }

SL2Elem sl2_mul(const SL2Elem& a, const SL2Elem& b) {
    if (a.d != b.d) throw std::invalid_argument("sl2_mul: modulus mismatch");
    // column-matrix product b * a realizes "apply a, then b"
    const int64_t d = a.d;
    return SL2Elem(d, b.s1 * a.s1 + b.t1 * a.s2, b.s1 * a.t1 + b.t1 * a.t2,
                   b.s2 * a.s1 + b.t2 * a.s2, b.s2 * a.t1 + b.t2 * a.t2);
}

SL2Elem sl2_inv(const SL2Elem& a) { return SL2Elem(a.d, a.t2, -a.t1, -a.s2, a.s1); }

int64_t sl2_group_order(int64_t d) {
    // |SL(2,Z_{p^k})| = p^{3k-2}(p^2-1), multiplicative over coprime factors
    int64_t order = 1;
    int64_t n = d;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int64_t pk = 1;
        while (n % p == 0) {
            n /= p;
            pk *= p;
        }
        order *= (pk * pk * pk / (p * p)) * (p * p - 1);
    }
    if (n > 1) order *= n * (n * n - 1);
    return order;
}

int64_t sl2_order(const SL2Elem& a) {
    const int64_t cap = sl2_group_order(a.d);
    SL2Elem x = a;
    for (int64_t k = 1; k <= cap; ++k) {
        if (x.is_identity()) return k;
        x = sl2_mul(x, a);
    }
    throw std::logic_error("sl2_order: exceeded |SL(2,Z_D)| cap");
}

std::vector<SL2Elem> rotation_family(int64_t d) {
    std::vector<SL2Elem> fam;
    for (int64_t a = 0; a < d; ++a)
        for (int64_t b = 0; b < d; ++b)
            if (mod_reduce(a * a + b * b, d) == 1) fam.emplace_back(d, a, -b, b, a);
    return fam;
}

}  // namespace qps::modring
