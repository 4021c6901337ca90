#include <doctest.h>

#include <random>

#include "qps/wk.hpp"

using namespace qps;
using linalg::CMat;
using linalg::cd;

TEST_SUITE("wk") {

TEST_CASE("delta is Hermitian with the fixed trace (odd D)") {
    for (int d : {3, 5, 7}) {
        const wk::WkBasis basis(d);
        for (int n1 = 0; n1 < d; ++n1)
            for (int n2 = 0; n2 < d; ++n2) {
                const CMat& dl = basis.delta(n1, n2);
                CHECK(linalg::fro_dist(dl, linalg::adjoint(dl)) < 1e-12);
                CHECK(std::abs(linalg::trace(dl) - cd{1.0 / std::sqrt(double(d)), 0}) <
                      1e-12);
            }
    }
}

TEST_CASE("delta orthonormality (odd D)") {
    const int d = 5;
    const wk::WkBasis basis(d);
    double worst = 0;
    for (int a1 = 0; a1 < d; ++a1)
        for (int a2 = 0; a2 < d; ++a2)
            for (int b1 = 0; b1 < d; ++b1)
                for (int b2 = 0; b2 < d; ++b2) {
                    const cd t = linalg::trace(
                        linalg::mat_mul(basis.delta(a1, a2), basis.delta(b1, b2)));
                    const double want = (a1 == b1 && a2 == b2) ? 1.0 : 0.0;
                    worst = std::max(worst, std::abs(t - want));
                }
    CHECK(worst < 1e-11);
}

TEST_CASE("round trip reconstructs the Schwinger basis") {
    SUBCASE("unit element") {
        const wk::WkBasis basis(4);
        CHECK(linalg::fro_dist(wk::s_from_delta(basis, 0, 0), CMat::identity(4)) <
              1e-11);
    }
    SUBCASE("random labels at D=5") {
        const wk::WkBasis basis(5);
        std::mt19937_64 rng(1);
        std::uniform_int_distribution<int> pick(0, 4);
        for (int t = 0; t < 10; ++t) {
            const int m1 = pick(rng), m2 = pick(rng);
            CHECK(linalg::fro_dist(wk::s_from_delta(basis, m1, m2),
                                   schwinger::schwinger_s(5, m1, m2)) < 1e-11);
        }
    }
    SUBCASE("full sweep at D=8") {
        const wk::WkBasis basis(8);
        double worst = 0;
        for (int m1 = 0; m1 < 8; ++m1)
            for (int m2 = 0; m2 < 8; ++m2)
                worst = std::max(worst,
                                 linalg::fro_dist(wk::s_from_delta(basis, m1, m2),
                                                  basis.schwinger_basis().s(m1, m2)));
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("duality round trip both directions, D = 2..12") {
    for (int d = 2; d <= 12; ++d) {
        const wk::WkBasis basis(d);
        double worst = 0;
        for (int m1 = 0; m1 < d; ++m1)
            for (int m2 = 0; m2 < d; ++m2)
                worst = std::max(worst,
                                 linalg::fro_dist(wk::s_from_delta(basis, m1, m2),
                                                  basis.schwinger_basis().s(m1, m2)));
        // second direction: rebuild Delta from the reconstructed S operators
        const double g0 = schwinger::gamma0(d);
        const double nrm = 1.0 / std::pow(double(d), 1.5);
        for (int n1 = 0; n1 < d && n1 < 3; ++n1)
            for (int n2 = 0; n2 < d && n2 < 3; ++n2) {
                CMat acc(d);
                for (int m1 = 0; m1 < d; ++m1)
                    for (int m2 = 0; m2 < d; ++m2) {
                        const long long cross =
                            ((1LL * m1 * n2 - 1LL * m2 * n1) % d + d) % d;
                        linalg::accumulate(acc, std::polar(nrm, -g0 * cross),
                                           wk::s_from_delta(basis, m1, m2));
                    }
                worst = std::max(worst, linalg::fro_dist(acc, basis.delta(n1, n2)));
            }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("completeness sum over all labels") {
    for (int d : {3, 6, 9}) {
        const wk::WkBasis basis(d);
        CMat total(d);
        for (int n1 = 0; n1 < d; ++n1)
            for (int n2 = 0; n2 < d; ++n2)
                linalg::accumulate(total, cd{1, 0}, basis.delta(n1, n2));
        CHECK(linalg::fro_dist(total, linalg::scale(CMat::identity(d),
                                                    cd{std::sqrt(double(d)), 0})) <
              1e-10);
    }
}

TEST_CASE("wigner function: realness, summation and phase invariance") {
    const int d = 5;
    const wk::WkBasis basis(d);
    SUBCASE("Fock state at D=3 is real everywhere") {
        const wk::WkBasis b3(3);
        const wk::StateVec psi = wk::StateVec::fock(3, 0);
        for (int n1 = 0; n1 < 3; ++n1)
            for (int n2 = 0; n2 < 3; ++n2)
                CHECK_NOTHROW((void)wk::wigner_wk(b3, psi, n1, n2));
    }
    SUBCASE("sum rule W -> sqrt(D)") {
        std::mt19937_64 rng(2);
        std::uniform_real_distribution<double> un(-1, 1);
        std::vector<cd> a(d);
        double nn = 0;
        for (auto& z : a) {
            z = cd{un(rng), un(rng)};
            nn += std::norm(z);
        }
        for (auto& z : a) z /= std::sqrt(nn);
        const wk::StateVec psi(d, a);
        double sum = 0;
        for (int n1 = 0; n1 < d; ++n1)
            for (int n2 = 0; n2 < d; ++n2) sum += wk::wigner_wk(basis, psi, n1, n2);
        CHECK(std::abs(sum - std::sqrt(double(d))) < 1e-10);

        std::vector<cd> rotated = a;
        for (auto& z : rotated) z *= std::polar(1.0, 1.234);
        const wk::StateVec psi2(d, rotated);
        for (int n1 = 0; n1 < d; ++n1)
            for (int n2 = 0; n2 < d; ++n2)
                CHECK(std::abs(wk::wigner_wk(basis, psi, n1, n2) -
                               wk::wigner_wk(basis, psi2, n1, n2)) < 1e-12);
    }
    SUBCASE("non-normalized state rejected") {
        std::vector<cd> bad(d, cd{1, 0});
        CHECK_THROWS_AS(wk::StateVec(d, bad), std::invalid_argument);
    }
}

}  // TEST_SUITE
