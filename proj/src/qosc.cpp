#include "qps/qosc.hpp"

#include <cmath>
#include <stdexcept>

#include "qps/modring.hpp"

namespace qps::qosc {

QOscillator build_qosc(int d, int kappa) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("build_qosc: d must be odd and >= 3");
    if (kappa % d == 0)
        throw std::invalid_argument("build_qosc: kappa = 0 (mod d) leaves C undefined");
    kappa = static_cast<int>(modring::mod_reduce(kappa, d));
    const double g0 = schwinger::gamma0(d);
    QOscillator o;
    o.d = d;
    o.kappa = kappa;
    o.q = std::polar(1.0, -g0 * kappa);
    const double s = std::sin(g0 * kappa);
    o.big_c = 1.0 / std::abs(s);
    const int h = (d - 1) / 2;
    o.f.resize(d);
    for (int n = 0; n < d; ++n) {
        // (q^{n+h} - q^{-n-h})/(q - q^{-1}) + C = sin(g0 k (n+h))/sin(g0 k) + C
        o.f[n] = std::sin(g0 * kappa * (n + h)) / s + o.big_c;
        if (o.f[n] < 0.0 && o.f[n] > -1e-12) o.f[n] = 0.0;
    }
    o.a = CMat(d);
    o.adag = CMat(d);
    o.qop = CMat(d);
    for (int n = 0; n < d; ++n) {
        o.a.at((n - 1 + d) % d, n) = cd{std::sqrt(o.f[n]), 0.0};
        o.adag.at((n + 1) % d, n) = cd{std::sqrt(o.f[(n + 1) % d]), 0.0};
        o.qop.at(n, n) = std::polar(1.0, g0 * kappa * (n + h));  // q^{-n-h}
    }
    return o;
}

std::map<std::string, double> qosc_algebra_residuals(const QOscillator& o) {
    using linalg::adjoint;
    using linalg::fro_dist;
    using linalg::mat_mul;
    using linalg::scale;
    const int d = o.d;
    const cd qinv = std::conj(o.q);
    std::map<std::string, double> res;

    res["AQ"] = fro_dist(mat_mul(o.a, o.qop), scale(mat_mul(o.qop, o.a), qinv));

    CMat bracket_n(d);  // (Q^{-1} - Q)/(q - q^{-1})
    const cd denom = o.q - qinv;
    for (int n = 0; n < d; ++n)
        bracket_n.at(n, n) = (std::conj(o.qop.at(n, n)) - o.qop.at(n, n)) / denom;
    CMat rhs = bracket_n;
    for (int n = 0; n < d; ++n) rhs.at(n, n) += o.big_c;
    res["AdA"] = fro_dist(mat_mul(o.adag, o.a), rhs);

    CMat lhs = linalg::sub(mat_mul(o.a, o.adag), scale(mat_mul(o.adag, o.a), o.q));
    CMat rhs2 = o.qop;
    const cd c1 = (cd{1.0, 0.0} - o.q) * o.big_c;
    for (int n = 0; n < d; ++n) rhs2.at(n, n) += c1;
    res["AAd"] = fro_dist(lhs, rhs2);
    return res;
}

UqSl2 uqsl2_from_schwinger(int d, const schwinger::PhaseVec& m,
                           const schwinger::PhaseVec& mprime) {
    if (d % 2 == 0)
        throw std::invalid_argument("uqsl2_from_schwinger: odd d required");
    if (m.d != d || mprime.d != d)
        throw std::invalid_argument("uqsl2_from_schwinger: label modulus mismatch");
    const long long kappa = modring::mod_reduce(m.cross(mprime), d);
    if (kappa == 0)
        throw std::invalid_argument("uqsl2_from_schwinger: m x m' = 0 (mod d)");
    const double g0 = schwinger::gamma0(d);
    const long long sigma = modring::mod_inverse(2, d);
    const long long half_kappa = modring::mod_reduce(sigma * kappa, d);
    UqSl2 u;
    u.q = std::polar(1.0, -g0 * kappa);
    u.q_half = std::polar(1.0, -g0 * half_kappa);
    const double coef = 1.0 / (2.0 * std::abs(std::sin(g0 * half_kappa)));
    const CMat sm = schwinger::schwinger_s(d, m.m1, m.m2);
    const CMat smp = schwinger::schwinger_s(d, mprime.m1, mprime.m2);
    u.jminus = linalg::scale(linalg::add(sm, smp), cd{coef, 0.0});
    u.jplus = linalg::adjoint(u.jminus);
    u.l = schwinger::schwinger_s(d, m.m1 - mprime.m1, m.m2 - mprime.m2);
    return u;
}

PhaseOp phase_operator(int d) {
    if (d < 2) throw std::invalid_argument("phase_operator: d >= 2 required");
    const double g0 = schwinger::gamma0(d);
    PhaseOp p{d, CMat(d), CMat(d)};
    const double nrm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int n = 0; n < d; ++n) {
        p.e.at((n - 1 + d) % d, n) = cd{1.0, 0.0};
        for (int r = 0; r < d; ++r)
            p.phase_states.at(n, r) =
                nrm * std::polar(1.0, g0 * ((1LL * n * r) % d));
    }
    return p;
}

NumberPhaseReport number_phase_commutators(int d, int r, int kappa) {
    if (r < 0) throw std::invalid_argument("number_phase_commutators: r >= 0");
    const PhaseOp p = phase_operator(d);
    NumberPhaseReport rep;
    // (i) Q^Gamma E^lambda = q^{Gamma lambda} E^lambda Q^Gamma, integer powers
    if (d % 2 == 1) {
        rep.qe_checked = true;
        const QOscillator o = build_qosc(d, kappa);
        for (int gam = 1; gam <= 3; ++gam)
            for (int lam = 1; lam <= 3; ++lam) {
                const CMat qg = linalg::unitary_pow(o.qop, gam);
                const CMat el = linalg::unitary_pow(p.e, lam);
                const cd ph = std::pow(o.q, gam * lam);
                rep.qe_residual = std::max(
                    rep.qe_residual,
                    linalg::fro_dist(linalg::mat_mul(qg, el),
                                     linalg::scale(linalg::mat_mul(el, qg), ph)));
            }
    }
    // (ii) [N, E^r] matrix elements
    CMat nop(d);
    for (int n = 0; n < d; ++n) nop.at(n, n) = cd{static_cast<double>(n), 0.0};
    const CMat er = linalg::unitary_pow(p.e, r);
    const CMat comm = linalg::sub(linalg::mat_mul(nop, er), linalg::mat_mul(er, nop));
    for (int n = 0; n < d; ++n) {
        const int np = (n - r % d + d) % d;
        const cd c = comm.at(np, n);
        const cd e = er.at(np, n);
        if (n >= r % d) {
            rep.nonwrap_residual = std::max(rep.nonwrap_residual,
                                            std::abs(c - cd{-double(r % d), 0} * e));
        } else {
            ++rep.wrap_count;
            rep.wrap_residual = std::max(
                rep.wrap_residual, std::abs(c - cd{double(d - r % d), 0} * e));
        }
    }
    return rep;
}

}  // namespace qps::qosc
