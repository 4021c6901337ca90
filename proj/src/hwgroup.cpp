#include "qps/hwgroup.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qps::hw {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

GammaSpec gamma_analyze(long long a, long long b, long long c) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("gamma_analyze: orders must be >= 1");
    GammaSpec spec;
    spec.a = a;
    spec.b = b;
    spec.c = c;
    spec.d = std::gcd(std::gcd(a, b), c);
    spec.valid = (a % c == 0) && (b % c == 0);
    if (spec.valid) {
        // c | a and c | b imply gcd(a,b,c) = c
        spec.a_prime = a / c;
        spec.b_prime = b / c;
        spec.irrep_count = spec.a_prime * spec.b_prime;
    }
    return spec;
}

WeylPair weyl_pair(int d) {
    if (d < 1) throw std::invalid_argument("weyl_pair: d >= 1 required");
    WeylPair p{CMat(d), CMat(d), std::polar(1.0, 2.0 * kPi / d)};
    for (int k = 0; k < d; ++k) {
        p.g.at(k, k) = std::polar(1.0, 2.0 * kPi * k / d);
        p.o.at((k + 1) % d, k) = cd{1.0, 0.0};
    }
    return p;
}

std::optional<Partner> partner_exists(const CMat& g, double tol,
                                      std::vector<int>* multiplicities) {
    auto pairs = linalg::eig_unitary(g, tol, 1e-6);
    if (multiplicities) {
        multiplicities->clear();
        for (const auto& p : pairs) multiplicities->push_back(p.multiplicity);
    }
    const int p = static_cast<int>(pairs.size());
    if (p < 2) return std::nullopt;  // Omega = 1 is excluded by convention
    for (const auto& pr : pairs)
        if (pr.multiplicity != pairs.front().multiplicity) return std::nullopt;
    // uniform phase ladder: sorted phases must step by 2 pi / p around the circle
    const double step = 2.0 * kPi / p;
    for (int k = 0; k < p; ++k) {
        double gap = std::arg(pairs[(k + 1) % p].eigenvalue /
                              pairs[k].eigenvalue);
        if (gap < 0) gap += 2.0 * kPi;
        if (std::abs(gap - step) > 1e-6) return std::nullopt;
    }
    const int n = g.dim;
    const int mult = pairs.front().multiplicity;
    // O maps the eigenbasis of cluster k to cluster k+1 (cyclically)
    CMat o(n);
    for (int k = 0; k < p; ++k) {
        const auto& src = pairs[k].basis;
        const auto& dst = pairs[(k + 1) % p].basis;
        for (int col = 0; col < mult; ++col)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    o.at(i, j) += dst[static_cast<std::size_t>(col) * n + i] *
                                  std::conj(src[static_cast<std::size_t>(col) * n + j]);
    }
    return Partner{std::move(o), std::polar(1.0, step), p};
}

}  // namespace qps::hw
