#include <doctest.h>

#include <cmath>
#include <random>

#include "qps/aawigner.hpp"

using namespace qps;
using linalg::CMat;
using linalg::cd;

namespace {
constexpr double kPi = 3.14159265358979323846;

wk::StateVec split_state(int d, int n) {
    std::vector<cd> a(d, cd{0, 0});
    a[n] = a[n - 1] = cd{1.0 / std::sqrt(2.0), 0};
    return wk::StateVec(d, std::move(a));
}

wk::StateVec rand_state(int d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<cd> a(d);
    double nrm = 0;
    for (auto& z : a) {
        z = cd{u(rng), u(rng)};
        nrm += std::norm(z);
    }
    for (auto& z : a) z /= std::sqrt(nrm);
    return wk::StateVec(d, std::move(a));
}
}  // namespace

TEST_SUITE("aawigner") {

TEST_CASE("shifted Fock vectors") {
    // beta = 0 round trip
    const auto v = aa::shifted_fock(7, 3, 0.0);
    for (int i = 0; i < 7; ++i)
        CHECK(std::abs(v[i] - (i == 3 ? cd{1, 0} : cd{0, 0})) < 1e-12);
    // Gram matrix within the half-shifted sector at d = 16
    std::vector<std::vector<cd>> b(16);
    for (int i = 0; i < 16; ++i) b[i] = aa::shifted_fock(16, i, 0.5);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            cd ip{0, 0};
            for (int k = 0; k < 16; ++k) ip += std::conj(b[i][k]) * b[j][k];
            CHECK(std::abs(ip - (i == j ? cd{1, 0} : cd{0, 0})) < 1e-12);
        }
    // cyclic identification
    const auto a1 = aa::shifted_fock(9, 2, 0.37);
    const auto a2 = aa::shifted_fock(9, 11, 0.37);
    for (int i = 0; i < 9; ++i) CHECK(std::abs(a1[i] - a2[i]) < 1e-12);
    CHECK_THROWS_AS(aa::shifted_fock(5, 0, 1.0), std::invalid_argument);
}

TEST_CASE("delta_ct: hermiticity, trace, completeness (d = 9)") {
    const int d = 9;
    const CMat dl = aa::delta_ct(d, 3.5, 0.77);
    CHECK(linalg::fro_dist(dl, linalg::adjoint(dl)) < 1e-11);
    CHECK(std::abs(linalg::trace(dl) - cd{1.0 / (2 * kPi), 0}) < 1e-11);
    const int T = 4 * d;
    CMat total(d);
    for (int j2 = 0; j2 < 2 * d; ++j2)
        for (int t = 0; t < T; ++t)
            linalg::accumulate(total, cd{(2 * kPi / T) * 0.5, 0},
                               aa::delta_ct(d, 0.5 * j2, 2 * kPi * t / T));
    CHECK(linalg::fro_dist(total, CMat::identity(d)) < 1e-9);
}

TEST_CASE("pure Fock closed form at D = 17") {
    const int d = 17, n = 8;
    const auto psi = wk::StateVec::fock(d, n);
    for (int j2 = 0; j2 < 2 * d; ++j2)
        for (double th : {0.0, 0.9, 3.3}) {
            const double want = (j2 == 2 * n) ? 1.0 / (2 * kPi) : 0.0;
            CHECK(std::abs(aa::aa_wigner(psi, 0.5 * j2, th) - want) < 1e-10);
        }
}

TEST_CASE("split state closed form at D = 17") {
    const int d = 17, n = 8;
    const auto psi = split_state(d, n);
    for (int j2 = 0; j2 < 2 * d; ++j2)
        for (double th : {0.0, 0.9, 3.3, 5.8}) {
            const double J = 0.5 * j2;
            double want = 0.0;
            if (J == n || J == n - 1) want = 1.0 / (4 * kPi);
            if (std::abs(J - (n - 0.5)) < 1e-12) want = std::cos(th) / (2 * kPi);
            CHECK(std::abs(aa::aa_wigner(psi, J, th) - want) < 1e-10);
        }
}

TEST_CASE("marginals") {
    const int d = 17, n = 8;
    SUBCASE("pure Fock: P(J) Kronecker, P(theta) uniform") {
        const auto psi = wk::StateVec::fock(d, n);
        const auto grid = aa::aa_wigner_grid(psi);
        const auto m = aa::aa_marginals(psi, grid);
        for (int j2 = 0; j2 < 2 * d; ++j2)
            CHECK(std::abs(m.p_j[j2] - (j2 == 2 * n ? 1.0 : 0.0)) < 1e-10);
        for (double v : m.p_theta) CHECK(std::abs(v - 1.0 / (2 * kPi)) < 1e-10);
    }
    SUBCASE("split: P(J) half-half, P(theta) = (1 + cos)/2pi") {
        const auto psi = split_state(d, n);
        const auto grid = aa::aa_wigner_grid(psi);
        const auto m = aa::aa_marginals(psi, grid);
        for (int j2 = 0; j2 < 2 * d; ++j2) {
            const double want = (j2 == 2 * n || j2 == 2 * (n - 1)) ? 0.5 : 0.0;
            CHECK(std::abs(m.p_j[j2] - want) < 1e-10);
        }
        double total = 0;
        for (std::size_t t = 0; t < m.p_theta.size(); ++t) {
            CHECK(std::abs(m.p_theta[t] -
                           (1 + std::cos(grid.theta_values[t])) / (2 * kPi)) < 1e-10);
            CHECK(m.p_theta[t] >= -1e-10);
            total += m.p_theta[t] * (2 * kPi / m.p_theta.size());
        }
        CHECK(std::abs(total - 1.0) < 1e-8);
    }
}

TEST_CASE("wigner is real and phase-shift equivariant") {
    std::mt19937_64 rng(4);
    const int d = 11;
    const auto psi = rand_state(d, rng);
    for (int t = 0; t < 24; ++t)
        CHECK_NOTHROW((void)aa::aa_wigner(psi, 0.5 * (t % (2 * d)), 0.3 * t));
    const auto p = qosc::phase_operator(d);
    const wk::StateVec shifted(d, linalg::mat_vec(p.e, psi.amps));
    const auto m1 = aa::aa_marginals(psi, aa::aa_wigner_grid(psi));
    const auto m2 = aa::aa_marginals(shifted, aa::aa_wigner_grid(shifted));
    for (int j = 0; j < d; ++j)
        CHECK(std::abs(m2.p_j[2 * j] - m1.p_j[2 * ((j + 1) % d)]) < 1e-12);
}

TEST_CASE("WWM symbols") {
    const int d = 16;  // even dimension is fine for the trace pairing
    CMat nop(d);
    for (int i = 0; i < d; ++i) nop.at(i, i) = cd{double(i), 0};
    for (int j = 0; j < d; ++j) {
        const cd v = aa::wwm_symbol_at(nop, double(j), 0.37);
        CHECK(std::abs(v - cd{double(j), 0}) < 1e-10);
    }
    // identity has symbol 1 on the whole grid
    for (int j2 = 0; j2 < 2 * d; j2 += 5)
        CHECK(std::abs(aa::wwm_symbol_at(CMat::identity(d), 0.5 * j2, 1.9) - cd{1, 0}) <
              1e-10);
    // E_N^{m1} has the theta-independent phase symbol e^{-i g0 m1 J}
    const double g0 = 2 * kPi / d;
    CMat en(d);
    for (int i = 0; i < d; ++i) en.at(i, i) = std::polar(1.0, -g0 * i);
    const CMat en3 = linalg::unitary_pow(en, 3);
    for (int j2 = 0; j2 < 2 * d; j2 += 3) {
        const cd v = aa::wwm_symbol_at(en3, 0.5 * j2, 0.3);
        CHECK(std::abs(v - std::polar(1.0, -g0 * 3 * 0.5 * j2)) < 1e-10);
        CHECK(std::abs(v - aa::wwm_symbol_at(en3, 0.5 * j2, 2.2)) < 1e-11);
    }
}

TEST_CASE("evolution basics") {
    const aa::SpectrumFn h{{0.0, 0.0, 1.0}};
    std::mt19937_64 rng(8);
    const auto psi = rand_state(9, rng);
    const auto same = aa::evolve(psi, h, 0.0);
    for (int i = 0; i < 9; ++i) CHECK(std::abs(same.amps[i] - psi.amps[i]) < 1e-15);
    CHECK(std::abs(aa::evolve(psi, h, 1.7).norm() - 1.0) < 1e-14);
}

TEST_CASE("linear spectrum transports the split-state angle marginal rigidly") {
    const int d = 17, n = 8;
    const double omega = 1.3;
    const aa::SpectrumFn h{{0.0, omega}};
    const auto psi = split_state(d, n);
    for (double t : {0.3, 1.0, 2.4}) {
        const auto pt = aa::evolve(psi, h, t);
        // global transport sign: theta(t) = -omega t in the lowering convention
        for (double th : {0.1, 0.9, 2.0})
            CHECK(std::abs(aa::aa_wigner(pt, n - 0.5, th) -
                           std::cos(th + omega * t) / (2 * kPi)) < 1e-10);
    }
    // whole-grid rigid transport by grid cells, random state
    std::mt19937_64 rng(10);
    const auto chi = rand_state(d, rng);
    const int T = 4 * d, shift = 5;
    const double t = (2 * kPi / T) * shift / omega;
    const auto w0 = aa::aa_wigner_grid(chi, T);
    const auto wt = aa::aa_wigner_grid(aa::evolve(chi, h, t), T);
    double worst = 0;
    for (int j2 = 0; j2 < 2 * d; ++j2)
        for (int tt = 0; tt < T; ++tt)
            worst = std::max(worst,
                             std::abs(wt.at(j2, tt) - w0.at(j2, (tt + shift) % T)));
    CHECK(worst < 1e-9);
}

TEST_CASE("moyal equation of motion") {
    const int d = 17, n = 8;
    const auto psi = split_state(d, n);
    const aa::SpectrumFn lin{{0.0, 1.0}};
    const aa::SpectrumFn quad{{0.0, 0.0, 1.0}};

    SUBCASE("fock state is static under H = wn") {
        const auto rhs = aa::moyal_rhs(aa::aa_wigner_grid(wk::StateVec::fock(d, n)), lin);
        for (double v : rhs.w) CHECK(std::abs(v) < 1e-11);
    }
    SUBCASE("matches direct evolution, H = wn") {
        const auto rhs = aa::moyal_rhs(aa::aa_wigner_grid(psi), lin);
        const double dt = 1e-4;
        const auto wp = aa::aa_wigner_grid(aa::evolve(psi, lin, dt));
        const auto wm = aa::aa_wigner_grid(aa::evolve(psi, lin, -dt));
        double worst = 0;
        for (std::size_t i = 0; i < rhs.w.size(); ++i)
            worst = std::max(worst, std::abs(rhs.w[i] - (wp.w[i] - wm.w[i]) / (2 * dt)));
        CHECK(worst < 1e-6);
    }
    SUBCASE("matches direct evolution, H = n^2") {
        const auto rhs = aa::moyal_rhs(aa::aa_wigner_grid(psi), quad);
        const double dt = 1e-4;
        const auto wp = aa::aa_wigner_grid(aa::evolve(psi, quad, dt));
        const auto wm = aa::aa_wigner_grid(aa::evolve(psi, quad, -dt));
        double worst = 0;
        for (std::size_t i = 0; i < rhs.w.size(); ++i)
            worst = std::max(worst, std::abs(rhs.w[i] - (wp.w[i] - wm.w[i]) / (2 * dt)));
        CHECK(worst < 1e-5);
    }
    SUBCASE("degree guard") {
        const aa::SpectrumFn big{{0, 0, 0, 0, 0, 1.0}};
        CHECK_THROWS_AS(aa::moyal_rhs(aa::aa_wigner_grid(psi), big),
                        std::invalid_argument);
    }
}

TEST_CASE("phase operator equation of motion report") {
    const aa::SpectrumFn lin{{0.0, 1.5}};
    const auto rows = aa::phase_op_eom_check(11, lin, 2, {0.0, 0.4, 1.1});
    for (const auto& r : rows) {
        CHECK(r.fd_residual < 1e-6);
        if (!r.wraps) CHECK(r.literal_matches);  // linear spectra agree exactly
    }
    const aa::SpectrumFn quad{{0.0, 0.0, 1.0}};
    const auto rows2 = aa::phase_op_eom_check(11, quad, 2, {0.2});
    int mismatches = 0;
    for (const auto& r : rows2) {
        CHECK(r.fd_residual < 1e-5);
        // direct form H(n) - H(n-r) vs literal H(n+r) - H(n): differ by 2 r^2
        if (!r.wraps) {
            CHECK(std::abs((r.freq_literal - r.freq_direct) - 2.0 * 2 * 2) < 1e-12);
            ++mismatches;
        }
    }
    CHECK(mismatches > 0);
    const auto rows0 = aa::phase_op_eom_check(7, quad, 0, {0.3});
    for (const auto& r : rows0) CHECK(r.freq_direct == 0.0);  // static
}

}  // TEST_SUITE
