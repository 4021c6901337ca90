#include "qps/schwinger.hpp"

#include <cmath>
#include <stdexcept>

#include "qps/modring.hpp"

namespace qps::schwinger {

namespace {
constexpr double kPi = 3.14159265358979323846;

long long wrap(long long a, long long d) {
    long long r = a % d;
    return r < 0 ? r + d : r;
}
}  // namespace

PhaseVec::PhaseVec(int d_, long long m1_, long long m2_) : d(d_) {
    if (d_ < 2) throw std::invalid_argument("PhaseVec: d >= 2 required");
    m1 = static_cast<int>(wrap(m1_, d_));
    m2 = static_cast<int>(wrap(m2_, d_));
}

double gamma0(int d) { return 2.0 * kPi / static_cast<double>(d); }

std::pair<CMat, CMat> clock_shift(int d) {
    if (d < 2) throw std::invalid_argument("clock_shift: d >= 2 required");
    CMat u(d), v(d);
    const double g0 = gamma0(d);
    for (int k = 0; k < d; ++k) {
        u.at((k + 1) % d, k) = cd{1.0, 0.0};
        v.at(k, k) = std::polar(1.0, -g0 * k);
    }
    return {u, v};
}

CMat schwinger_s(int d, long long m1, long long m2) {
    if (d < 2) throw std::invalid_argument("schwinger_s: d >= 2 required");
    const double g0 = gamma0(d);
    const int a = static_cast<int>(wrap(m1, d));
    const int b = static_cast<int>(wrap(m2, d));
    cd phase;
    if (d % 2 == 1) {
        const long long sigma = modring::mod_inverse(2, d);
        phase = std::polar(1.0, -g0 * static_cast<double>(wrap(sigma * wrap(m1 * wrap(m2, d), d), d)));
    } else {
        // exponent lives in Z_{2D}: e^{-i g0 m1 m2 / 2} = zeta_{2D}^{-m1 m2}
        phase = std::polar(1.0, -(kPi / d) * static_cast<double>(wrap(m1 * m2, 2LL * d)));
    }
    // S_m[(j + m1) mod d, j] = phase * e^{-i g0 m2 j}
    CMat s(d);
    for (int j = 0; j < d; ++j)
        s.at((j + a) % d, j) = phase * std::polar(1.0, -g0 * static_cast<double>(wrap(1LL * b * j, d)));
    return s;
}

CMat schwinger_s(const PhaseVec& m) { return schwinger_s(m.d, m.m1, m.m2); }

cd composition_phase(int d, long long m1, long long m2, long long n1, long long n2) {
    const double g0 = gamma0(d);
    const long long cross = m1 * n2 - m2 * n1;
    if (d % 2 == 1) {
        const long long sigma = modring::mod_inverse(2, d);
        return std::polar(1.0, g0 * static_cast<double>(wrap(sigma * wrap(cross, d), d)));
    }
    return std::polar(1.0, (kPi / d) * static_cast<double>(wrap(cross, 2LL * d)));
}

CMat fourier(int d) {
    if (d < 2) throw std::invalid_argument("fourier: d >= 2 required");
    CMat f(d);
    const double g0 = gamma0(d);
    const double nrm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k)
        for (int kp = 0; kp < d; ++kp)
            f.at(k, kp) = nrm * std::polar(1.0, -g0 * static_cast<double>(wrap(1LL * k * kp, d)));
    return f;
}

DftMultiplicities dft_multiplicities(int d) {
    const CMat f = fourier(d);
    auto pairs = linalg::eig_unitary(f, 1e-8, 1e-6);
    DftMultiplicities out{0, 0, 0, 0};
    for (const auto& p : pairs) {
        const cd targets[4] = {cd{1, 0}, cd{-1, 0}, cd{0, -1}, cd{0, 1}};
        int* slots[4] = {&out.plus_one, &out.minus_one, &out.minus_i, &out.plus_i};
        bool matched = false;
        for (int t = 0; t < 4; ++t)
            if (std::abs(p.eigenvalue - targets[t]) < 1e-6) {
                *slots[t] += p.multiplicity;
                matched = true;
                break;
            }
        if (!matched)
            throw std::logic_error("dft_multiplicities: eigenvalue off the 4th roots");
    }
    return out;
}

Basis::Basis(int d) : d_(d) {
    auto uv = clock_shift(d);
    u_ = std::move(uv.first);
    v_ = std::move(uv.second);
    f_ = fourier(d);
    s_.reserve(static_cast<std::size_t>(d) * d);
    for (int m1 = 0; m1 < d; ++m1)
        for (int m2 = 0; m2 < d; ++m2) s_.push_back(schwinger_s(d, m1, m2));
}

const CMat& Basis::s(int m1, int m2) const {
    const int a = static_cast<int>(wrap(m1, d_));
    const int b = static_cast<int>(wrap(m2, d_));
    return s_[static_cast<std::size_t>(a) * d_ + b];
}

}  // namespace qps::schwinger
