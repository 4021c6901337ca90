#include "qps/metaplectic.hpp"

#include <cmath>
#include <stdexcept>

namespace qps::meta {

namespace {

using modring::mod_inverse;
using modring::mod_reduce;

void require_domain(int64_t d) {
    if (!modring::is_prime(d) || d % 2 == 0)
        throw std::invalid_argument("metaplectic: dimension must be an odd prime");
}

// the Gauss-sum expansion, which implements m -> R^{-T} m on the S basis
CMat raw_g(const schwinger::Basis& basis, const SL2Elem& r, CaseTag& tag) {
    const int d = static_cast<int>(r.d);
    const double g0 = schwinger::gamma0(d);
    const int64_t delta = mod_reduce(2 - r.s1 - r.t2, d);
    CMat acc(d);
    if (delta != 0) {
        tag = CaseTag::generic;
        const cd pref = modring::gauss_sum(1, d) * modring::gauss_sum(delta, d) /
                        static_cast<double>(d);
        const int64_t i2d = mod_inverse(2 * delta, d);
        for (int m1 = 0; m1 < d; ++m1)
            for (int m2 = 0; m2 < d; ++m2) {
                const int64_t q = mod_reduce(
                    r.t1 * m1 % d * m1 + (r.t2 - r.s1) * m1 % d * m2 -
                        r.s2 * m2 % d * m2,
                    d);
                const cd ph = std::polar(1.0, g0 * mod_reduce(q * i2d, d));
                linalg::accumulate(acc, pref * ph, basis.s(m1, m2));
            }
        return acc;
    }
    if (r.t1 != 0) {
        tag = CaseTag::parabolic;
        const cd pref =
            modring::gauss_sum(mod_reduce(-2 * r.t1, d), d) / std::sqrt(double(d));
        const int64_t i2t1 = mod_inverse(2 * r.t1, d);
        const int64_t it1 = mod_inverse(r.t1, d);
        for (int m1 = 0; m1 < d; ++m1) {
            const cd ph = std::polar(1.0, g0 * mod_reduce(1LL * m1 * m1 % d * i2t1, d));
            const int lab1 = static_cast<int>(mod_reduce(m1 * (r.s1 - 1) % d * it1, d));
            linalg::accumulate(acc, pref * ph, basis.s(lab1, m1));
        }
        return acc;
    }
    if (r.s2 != 0) {
        tag = CaseTag::diagonal;
        const cd pref =
            modring::gauss_sum(mod_reduce(-2 * r.s2, d), d) / std::sqrt(double(d));
        const int64_t i2s2 = mod_inverse(2 * r.s2, d);
        for (int m1 = 0; m1 < d; ++m1) {
            const cd ph = std::polar(1.0, -g0 * mod_reduce(1LL * m1 * m1 % d * i2s2, d));
            linalg::accumulate(acc, pref * ph, basis.s(m1, 0));
        }
        return acc;
    }
    // delta = 0, t1 = 0, s2 = 0 forces s1 = t2 = 1 over a prime modulus
    if (!r.is_identity())
        throw std::logic_error("metaplectic: unhandled degenerate case");
    tag = CaseTag::identity;
    return CMat::identity(d);
}

}  // namespace

const char* case_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::generic: return "generic";
        case CaseTag::parabolic: return "parabolic";
        case CaseTag::diagonal: return "diagonal";
        case CaseTag::identity: return "identity";
    }
    return "?";
}

MetaplecticOp metaplectic_g(const schwinger::Basis& basis, const SL2Elem& r) {
    require_domain(r.d);
    if (basis.dim() != r.d) throw std::invalid_argument("metaplectic_g: dim mismatch");
    // feed R^{-T} so that the realized action is m -> R:m
    const SL2Elem rt(r.d, r.t2, -r.s2, -r.t1, r.s1);
    CaseTag branch = CaseTag::identity;
    CMat g = raw_g(basis, rt, branch);
    // the reported tag follows the entries of r itself (the wrap swaps the
    // two shear branches internally)
    CaseTag tag;
    if (mod_reduce(2 - r.s1 - r.t2, r.d) != 0) tag = CaseTag::generic;
    else if (r.t1 != 0) tag = CaseTag::parabolic;
    else if (r.s2 != 0) tag = CaseTag::diagonal;
    else tag = CaseTag::identity;
    return MetaplecticOp{r, static_cast<int>(r.d), std::move(g), tag};
}

MetaplecticOp metaplectic_g(const SL2Elem& r) {
    require_domain(r.d);
    schwinger::Basis basis(static_cast<int>(r.d));
    return metaplectic_g(basis, r);
}

double covariance_error(const schwinger::Basis& basis, const MetaplecticOp& g) {
    const int d = g.d;
    const CMat gd = linalg::adjoint(g.mat);
    double worst = 0.0;
    for (int m1 = 0; m1 < d; ++m1)
        for (int m2 = 0; m2 < d; ++m2) {
            const CMat lhs = linalg::mat_mul(gd, linalg::mat_mul(basis.s(m1, m2), g.mat));
            const auto mp = g.r.act(m1, m2);
            worst = std::max(worst, linalg::fro_dist(lhs, basis.s(static_cast<int>(mp.first),
                                                                  static_cast<int>(mp.second))));
        }
    return worst;
}

double covariance_error(const MetaplecticOp& g) {
    schwinger::Basis basis(g.d);
    return covariance_error(basis, g);
}

double wk_covariance_error(const wk::WkBasis& basis, const MetaplecticOp& g) {
    const int d = g.d;
    const CMat gd = linalg::adjoint(g.mat);
    double worst = 0.0;
    for (int n1 = 0; n1 < d; ++n1)
        for (int n2 = 0; n2 < d; ++n2) {
            const CMat lhs =
                linalg::mat_mul(gd, linalg::mat_mul(basis.delta(n1, n2), g.mat));
            const auto np = g.r.act(n1, n2);
            worst = std::max(worst,
                             linalg::fro_dist(lhs, basis.delta(static_cast<int>(np.first),
                                                               static_cast<int>(np.second))));
        }
    return worst;
}

double wk_covariance_error(const MetaplecticOp& g) {
    wk::WkBasis basis(g.d);
    return wk_covariance_error(basis, g);
}

ProjectiveFit projective_multiplier(const SL2Elem& r1, const SL2Elem& r2) {
    if (r1.d != r2.d) throw std::invalid_argument("projective_multiplier: modulus mismatch");
    schwinger::Basis basis(static_cast<int>(r1.d));
    const MetaplecticOp g1 = metaplectic_g(basis, r1);
    const MetaplecticOp g2 = metaplectic_g(basis, r2);
    const MetaplecticOp g12 = metaplectic_g(basis, modring::sl2_mul(r1, r2));
    const CMat prod = linalg::mat_mul(g1.mat, g2.mat);
    const cd t = linalg::trace(linalg::mat_mul(linalg::adjoint(g12.mat), prod));
    if (std::abs(t) < 1e-9)
        throw std::logic_error("projective_multiplier: trace fit degenerate");
    const cd lambda = t / std::abs(t);
    const double residual = linalg::fro_dist(prod, linalg::scale(g12.mat, lambda));
    return {lambda, residual};
}

int projective_order(const MetaplecticOp& g, double tol) {
    const int cap = static_cast<int>(modring::sl2_group_order(g.d)) * 4;
    CMat x = g.mat;
    for (int k = 1; k <= cap; ++k) {
        const cd t = linalg::trace(x);
        if (std::abs(t) > 1e-9) {
            const cd lambda = t / std::abs(t);
            if (linalg::fro_dist(x, linalg::scale(CMat::identity(g.d), lambda)) <= tol)
                return k;
        }
        x = linalg::mat_mul(x, g.mat);
    }
    throw std::logic_error("projective_order: exceeded cap");
}

}  // namespace qps::meta
