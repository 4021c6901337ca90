#include "qps/aawigner.hpp"

#include <cmath>
#include <stdexcept>

namespace qps::aa {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

int require_half_integer(double j) {
    const double two_j = 2.0 * j;
    const double r = std::round(two_j);
    if (std::abs(two_j - r) > 1e-9)
        throw std::invalid_argument("aa: 2J must be an integer");
    return static_cast<int>(r);
}
}  // namespace

double SpectrumFn::eval(double n) const {
    double acc = 0.0;
    for (std::size_t p = coeffs.size(); p-- > 0;) acc = acc * n + coeffs[p];
    return acc;
}

int SpectrumFn::degree() const {
    for (std::size_t p = coeffs.size(); p-- > 0;)
        if (coeffs[p] != 0.0) return static_cast<int>(p);
    return 0;
}

std::vector<cd> shifted_fock(int d, int n, double beta) {
    if (beta < 0.0 || beta >= 1.0)
        throw std::invalid_argument("shifted_fock: beta must lie in [0,1)");
    const double g0 = schwinger::gamma0(d);
    const qosc::PhaseOp p = qosc::phase_operator(d);
    std::vector<cd> out(d, cd{0.0, 0.0});
    const double nrm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int l = 0; l < d; ++l) {
        const cd c = nrm * std::polar(1.0, -g0 * (n + beta) * l);
        for (int i = 0; i < d; ++i) out[i] += c * p.phase_states.at(i, l);
    }
    return out;
}

CMat delta_ct(int d, double j, double theta) {
    if (d < 2) throw std::invalid_argument("delta_ct: d >= 2 required");
    const double g0 = schwinger::gamma0(d);
    const int h_lo = -(d - 1) / 2;  // symmetric for odd d; {-(d/2-1), ..., d/2} else
    const int h_hi = h_lo + d - 1;
    CMat acc(d);
    const double nrm = 1.0 / (kTwoPi * d);
    for (int m1 = h_lo; m1 <= h_hi; ++m1)
        for (int m2 = h_lo; m2 <= h_hi; ++m2) {
            const cd coef =
                nrm * std::polar(1.0, g0 * m1 * j - m2 * theta - 0.5 * g0 * m1 * m2);
            // (E_N^{m1} E_phi^{m2})[i, jj]: nonzero at i = jj - m2 (mod d)
            for (int jj = 0; jj < d; ++jj) {
                const int i = ((jj - m2) % d + d) % d;
                acc.at(i, jj) += coef * std::polar(1.0, -g0 * m1 * i);
            }
        }
    return acc;
}

double aa_wigner(const StateVec& psi, double j, double theta) {
    const int d = psi.d;
    if (std::abs(psi.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("aa_wigner: state not normalized");
    const int two_j = require_half_integer(j);
    cd acc{0.0, 0.0};
    for (int k = -(d - 1); k <= d - 1; ++k) {
        if (((k - two_j) % 2 + 2) % 2 != 0) continue;  // parity-matched cells only
        const int a2 = two_j + k, b2 = two_j - k;
        if (a2 < 0 || b2 < 0 || a2 % 2 || b2 % 2) continue;
        const int a = a2 / 2, b = b2 / 2;
        if (a >= d || b >= d) continue;
        acc += std::polar(1.0, -k * theta) * std::conj(psi.amps[b]) * psi.amps[a];
    }
    if (std::abs(acc.imag()) > 1e-11)
        throw std::logic_error("aa_wigner: imaginary residue above 1e-11");
    return acc.real() / kTwoPi;
}

AAGrid aa_wigner_grid(const StateVec& psi, int t_samples) {
    const int d = psi.d;
    const int T = t_samples > 0 ? t_samples : 4 * d;
    AAGrid grid;
    grid.d = d;
    grid.j_values.resize(2 * d);
    grid.theta_values.resize(T);
    for (int j2 = 0; j2 < 2 * d; ++j2) grid.j_values[j2] = 0.5 * j2;
    for (int t = 0; t < T; ++t) grid.theta_values[t] = kTwoPi * t / T;
    grid.w.assign(static_cast<std::size_t>(2 * d) * T, 0.0);
    for (int j2 = 0; j2 < 2 * d; ++j2)
        for (int t = 0; t < T; ++t)
            grid.at(j2, t) = aa_wigner(psi, grid.j_values[j2], grid.theta_values[t]);
    return grid;
}

Marginals aa_marginals(const StateVec& psi, const AAGrid& grid) {
    if (psi.d != grid.d) throw std::invalid_argument("aa_marginals: dim mismatch");
    const int T = static_cast<int>(grid.theta_values.size());
    const int rows = static_cast<int>(grid.j_values.size());
    Marginals m;
    m.p_j.assign(rows, 0.0);
    m.p_theta.assign(T, 0.0);
    for (int j2 = 0; j2 < rows; ++j2) {
        double s = 0.0;
        for (int t = 0; t < T; ++t) s += grid.at(j2, t);
        m.p_j[j2] = s * (kTwoPi / T);  // periodic trapezoid = plain mean * 2pi
    }
    for (int t = 0; t < T; ++t) {
        double s = 0.0;
        for (int j2 = 0; j2 < rows; ++j2) s += grid.at(j2, t);
        m.p_theta[t] = s;  // unit weight per half-integer grid point
    }
    return m;
}

cd wwm_symbol_at(const CMat& f, double j, double theta) {
    return kTwoPi * linalg::trace(linalg::mat_mul(f, delta_ct(f.dim, j, theta)));
}

std::vector<cd> wwm_symbol(const CMat& f, const AAGrid& grid) {
    if (f.dim != grid.d) throw std::invalid_argument("wwm_symbol: dim mismatch");
    std::vector<cd> table;
    table.reserve(grid.j_values.size() * grid.theta_values.size());
    for (double j : grid.j_values)
        for (double th : grid.theta_values) table.push_back(wwm_symbol_at(f, j, th));
    return table;
}

StateVec evolve(const StateVec& psi0, const SpectrumFn& h, double t) {
    std::vector<cd> amps(psi0.amps);
    for (int n = 0; n < psi0.d; ++n) amps[n] *= std::polar(1.0, -h.eval(n) * t);
    return StateVec(psi0.d, std::move(amps));
}

AAGrid moyal_rhs(const AAGrid& w, const SpectrumFn& h) {
    if (h.degree() > 4)
        throw std::invalid_argument("moyal_rhs: polynomial degree must be <= 4");
    const int T = static_cast<int>(w.theta_values.size());
    const int rows = static_cast<int>(w.j_values.size());
    AAGrid out = w;
    std::vector<cd> hat(T), row(T);
    for (int j2 = 0; j2 < rows; ++j2) {
        const double j = w.j_values[j2];
        // forward DFT: hat[k] = sum_t w[t] e^{-2pi i k t / T}
        for (int k = 0; k < T; ++k) {
            cd s{0.0, 0.0};
            for (int t = 0; t < T; ++t)
                s += w.at(j2, t) * std::polar(1.0, -kTwoPi * k * t / T);
            hat[k] = s;
        }
        // on the e^{+i k theta} mode, (i/2) d_theta evaluates to -k/2
        for (int k = 0; k < T; ++k) {
            const int ks = k <= T / 2 ? k : k - T;
            const double hp = h.eval(j - 0.5 * ks);
            const double hm = h.eval(j + 0.5 * ks);
            hat[k] *= cd{0.0, -(hp - hm)};
        }
        for (int t = 0; t < T; ++t) {
            cd s{0.0, 0.0};
            for (int k = 0; k < T; ++k)
                s += hat[k] * std::polar(1.0 / T, kTwoPi * k * t / T);
            if (std::abs(s.imag()) > 1e-9)
                throw std::logic_error("moyal_rhs: non-real result");
            out.at(j2, t) = s.real();
        }
    }
    return out;
}

std::vector<EomRow> phase_op_eom_check(int d, const SpectrumFn& h, int r,
                                       const std::vector<double>& t_samples) {
    if (r < 0 || r >= d) throw std::invalid_argument("phase_op_eom_check: r in [0, d)");
    std::vector<EomRow> rows;
    rows.reserve(d);
    const double dt = 1e-6;
    for (int n = 0; n < d; ++n) {
        EomRow row;
        row.n = n;
        row.n_prime = ((n - r) % d + d) % d;
        row.wraps = n < r;
        const double hn = h.eval(n);
        const double hnp = h.eval(row.n_prime);
        row.freq_direct = hn - hnp;
        row.freq_literal = h.eval(n + r) - hn;
        row.literal_matches = std::abs(row.freq_direct - row.freq_literal) <= 1e-9;
        row.fd_residual = 0.0;
        for (double t : t_samples) {
            // element(t) = e^{i (H(n') - H(n)) t}; centered difference in t
            const cd ep = std::polar(1.0, (hnp - hn) * (t + dt));
            const cd em = std::polar(1.0, (hnp - hn) * (t - dt));
            const cd lhs = cd{0.0, 1.0} * (ep - em) / (2.0 * dt);
            const cd rhs = -std::polar(1.0, (hnp - hn) * t) * (hnp - hn);
            row.fd_residual = std::max(row.fd_residual, std::abs(lhs - rhs));
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qps::aa
