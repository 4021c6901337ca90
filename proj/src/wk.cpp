#include "qps/wk.hpp"

#include <cmath>
#include <stdexcept>

namespace qps::wk {

StateVec::StateVec(int d_, std::vector<cd> amps_, bool normalized)
    : d(d_), amps(std::move(amps_)) {
    if (static_cast<int>(amps.size()) != d)
        throw std::invalid_argument("StateVec: amplitude count != d");
    if (normalized && std::abs(norm() - 1.0) > 1e-12)
        throw std::invalid_argument("StateVec: state not normalized");
}

StateVec StateVec::fock(int d, int n) {
    if (n < 0 || n >= d) throw std::invalid_argument("StateVec::fock: n out of range");
    std::vector<cd> a(d, cd{0.0, 0.0});
    a[n] = cd{1.0, 0.0};
    return StateVec(d, std::move(a));
}

double StateVec::norm() const {
    double s = 0.0;
    for (const cd& z : amps) s += std::norm(z);
    return std::sqrt(s);
}

WkBasis::WkBasis(int d) : d_(d), basis_(d) {
    const double g0 = schwinger::gamma0(d);
    const double nrm = 1.0 / std::pow(static_cast<double>(d), 1.5);
    delta_.reserve(static_cast<std::size_t>(d) * d);
    for (int n1 = 0; n1 < d; ++n1)
        for (int n2 = 0; n2 < d; ++n2) {
            CMat acc(d);
            for (int m1 = 0; m1 < d; ++m1)
                for (int m2 = 0; m2 < d; ++m2) {
                    const long long cross =
                        ((1LL * m1 * n2 - 1LL * m2 * n1) % d + d) % d;
                    linalg::accumulate(acc, std::polar(nrm, -g0 * cross),
                                       basis_.s(m1, m2));
                }
            delta_.push_back(std::move(acc));
        }
}

const CMat& WkBasis::delta(int n1, int n2) const {
    const int a = ((n1 % d_) + d_) % d_;
    const int b = ((n2 % d_) + d_) % d_;
    return delta_[static_cast<std::size_t>(a) * d_ + b];
}

CMat delta_wk(const PhaseVec& n) {
    WkBasis basis(n.d);
    return basis.delta(n.m1, n.m2);
}

CMat s_from_delta(const WkBasis& basis, int m1, int m2) {
    const int d = basis.dim();
    const double g0 = schwinger::gamma0(d);
    const double nrm = 1.0 / std::sqrt(static_cast<double>(d));
    CMat acc(d);
    for (int n1 = 0; n1 < d; ++n1)
        for (int n2 = 0; n2 < d; ++n2) {
            const long long cross = ((1LL * m1 * n2 - 1LL * m2 * n1) % d + d) % d;
            linalg::accumulate(acc, std::polar(nrm, g0 * cross), basis.delta(n1, n2));
        }
    return acc;
}

CMat s_from_delta(const PhaseVec& m) {
    WkBasis basis(m.d);
    return s_from_delta(basis, m.m1, m.m2);
}

double wigner_wk(const WkBasis& basis, const StateVec& psi, int n1, int n2) {
    if (psi.d != basis.dim()) throw std::invalid_argument("wigner_wk: dim mismatch");
    if (std::abs(psi.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("wigner_wk: state not normalized");
    const std::vector<cd> dv = linalg::mat_vec(basis.delta(n1, n2), psi.amps);
    cd w{0.0, 0.0};
    for (int i = 0; i < psi.d; ++i) w += std::conj(psi.amps[i]) * dv[i];
    if (basis.dim() % 2 == 1 && std::abs(w.imag()) > 1e-12)
        throw std::logic_error("wigner_wk: imaginary residue above 1e-12");
    return w.real();
}

double wigner_wk(const StateVec& psi, const PhaseVec& n) {
    WkBasis basis(psi.d);
    return wigner_wk(basis, psi, n.m1, n.m2);
}

}  // namespace qps::wk
