#include <doctest.h>

#include <random>

#include "qps/schwinger.hpp"

using namespace qps;
using linalg::CMat;
using linalg::cd;

TEST_SUITE("schwinger") {

TEST_CASE("clock and shift at d = 2") {
    const auto [u, v] = schwinger::clock_shift(2);
    CHECK(u.at(0, 1) == cd{1, 0});
    CHECK(u.at(1, 0) == cd{1, 0});
    CHECK(std::abs(v.at(0, 0) - cd{1, 0}) < 1e-15);
    CHECK(std::abs(v.at(1, 1) - cd{-1, 0}) < 1e-15);
}

TEST_CASE("U^D = I structurally") {
    for (int d : {2, 5, 9}) {
        const auto [u, v] = schwinger::clock_shift(d);
        CHECK(linalg::fro_dist(linalg::unitary_pow(u, d), CMat::identity(d)) == 0.0);
    }
}

TEST_CASE("Weyl commutation over all labels") {
    for (int d : {3, 5, 8, 12}) {
        const auto [u, v] = schwinger::clock_shift(d);
        const double g0 = schwinger::gamma0(d);
        double worst = 0;
        for (int m1 = 0; m1 < d; ++m1)
            for (int m2 = 0; m2 < d; ++m2) {
                const CMat um = linalg::unitary_pow(u, m1);
                const CMat vm = linalg::unitary_pow(v, m2);
                const cd ph = std::polar(1.0, g0 * ((1LL * m1 * m2) % d));
                worst = std::max(worst,
                                 linalg::fro_dist(linalg::mat_mul(um, vm),
                                                  linalg::scale(linalg::mat_mul(vm, um), ph)));
            }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("S_(0,0) is the unit element") {
    for (int d : {2, 5, 8})
        CHECK(linalg::fro_dist(schwinger::schwinger_s(d, 0, 0), CMat::identity(d)) == 0.0);
}

TEST_CASE("adjoint sends m to -m") {
    for (int d : {3, 5, 8})
        for (int m1 = 0; m1 < d; ++m1)
            for (int m2 = 0; m2 < d; ++m2)
                CHECK(linalg::fro_dist(linalg::adjoint(schwinger::schwinger_s(d, m1, m2)),
                                       schwinger::schwinger_s(d, -m1, -m2)) < 1e-12);
}

TEST_CASE("composition law with its cocycle") {
    std::mt19937_64 rng(5);
    for (int d : {3, 5, 8}) {
        std::uniform_int_distribution<int> pick(0, d - 1);
        for (int t = 0; t < 40; ++t) {
            const int a1 = pick(rng), a2 = pick(rng), b1 = pick(rng), b2 = pick(rng);
            const CMat lhs = linalg::mat_mul(schwinger::schwinger_s(d, a1, a2),
                                             schwinger::schwinger_s(d, b1, b2));
            const cd ph = schwinger::composition_phase(d, a1, a2, b1, b2);
            const CMat rhs =
                linalg::scale(schwinger::schwinger_s(d, a1 + b1, a2 + b2), ph);
            CHECK(linalg::fro_dist(lhs, rhs) < 1e-12);
        }
    }
}

TEST_CASE("trace identity") {
    for (int d = 2; d <= 16; ++d) {
        double worst = 0;
        for (int m1 = 0; m1 < d; ++m1)
            for (int m2 = 0; m2 < d; ++m2) {
                const cd t = linalg::trace(schwinger::schwinger_s(d, m1, m2));
                const cd want = (m1 == 0 && m2 == 0) ? cd{double(d), 0} : cd{0, 0};
                worst = std::max(worst, std::abs(t - want));
            }
        CHECK(worst < 1e-11);
    }
}

TEST_CASE("fourier basics") {
    for (int d : {4, 5, 9, 16}) {
        const CMat f = schwinger::fourier(d);
        CHECK(linalg::unitarity_error(f) < 1e-12);
        CHECK(linalg::fro_dist(linalg::unitary_pow(f, 4), CMat::identity(d)) < 1e-12);
    }
}

TEST_CASE("fourier conjugation is the quarter rotation") {
    for (int d : {5, 8}) {
        const CMat f = schwinger::fourier(d);
        const CMat finv = linalg::adjoint(f);
        double worst = 0;
        for (int m1 = 0; m1 < d; ++m1)
            for (int m2 = 0; m2 < d; ++m2) {
                const CMat lhs = linalg::mat_mul(f, linalg::mat_mul(schwinger::schwinger_s(d, m1, m2), finv));
                worst = std::max(worst,
                                 linalg::fro_dist(lhs, schwinger::schwinger_s(d, -m2, m1)));
            }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("fourier automorphism four-step cycle") {
    for (int d : {3, 8, 16}) {
        const auto [u, v] = schwinger::clock_shift(d);
        const CMat f = schwinger::fourier(d);
        const CMat finv = linalg::adjoint(f);
        auto cf = [&](const CMat& x) { return linalg::mat_mul(f, linalg::mat_mul(x, finv)); };
        const CMat uinv = linalg::adjoint(u), vinv = linalg::adjoint(v);
        CHECK(linalg::fro_dist(cf(u), v) < 1e-12);
        CHECK(linalg::fro_dist(cf(v), uinv) < 1e-12);
        CHECK(linalg::fro_dist(cf(uinv), vinv) < 1e-12);
        CHECK(linalg::fro_dist(cf(vinv), u) < 1e-12);
    }
}

TEST_CASE("dft multiplicities match the eigendecomposition oracle") {
    const auto m4 = schwinger::dft_multiplicities(4);
    CHECK(m4.plus_one == 2);
    CHECK(m4.minus_one == 1);
    CHECK(m4.minus_i == 1);
    CHECK(m4.plus_i == 0);
    const auto m5 = schwinger::dft_multiplicities(5);
    CHECK(m5.plus_one == 2);
    CHECK(m5.minus_one == 1);
    CHECK(m5.minus_i == 1);
    CHECK(m5.plus_i == 1);
    for (int d : {2, 7, 12, 33, 64}) {
        const auto m = schwinger::dft_multiplicities(d);
        CHECK(m.plus_one + m.minus_one + m.minus_i + m.plus_i == d);
        // independent trace-moment oracle: 4 m_lambda = sum_j Tr(F^j) lambda^-j
        const CMat f = schwinger::fourier(d);
        cd tr[4];
        for (int j = 0; j < 4; ++j) tr[j] = linalg::trace(linalg::unitary_pow(f, j));
        auto mom = [&](cd lam) {
            cd s{0, 0};
            for (int j = 0; j < 4; ++j) s += tr[j] * std::pow(std::conj(lam), j);
            return static_cast<int>(std::lround(s.real() / 4.0));
        };
        CHECK(m.plus_one == mom(cd{1, 0}));
        CHECK(m.minus_one == mom(cd{-1, 0}));
        CHECK(m.minus_i == mom(cd{0, -1}));
        CHECK(m.plus_i == mom(cd{0, 1}));
    }
}

TEST_CASE("PhaseVec canonical range") {
    const schwinger::PhaseVec m(5, -1, 7);
    CHECK(m.m1 == 4);
    CHECK(m.m2 == 2);
    CHECK_THROWS_AS(schwinger::PhaseVec(1, 0, 0), std::invalid_argument);
}

}  // TEST_SUITE
