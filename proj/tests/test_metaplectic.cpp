#include <doctest.h>

#include <random>

#include "qps/metaplectic.hpp"

using namespace qps;
using linalg::CMat;
using linalg::cd;
using modring::SL2Elem;

namespace {

SL2Elem rand_sl2(int64_t d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int64_t> pick(0, d - 1);
    while (true) {
        const int64_t s1 = pick(rng), t1 = pick(rng), s2 = pick(rng);
        try {
            const int64_t t2 =
                modring::mod_reduce(modring::mod_inverse(s1, d) * (1 + t1 * s2), d);
            return SL2Elem(d, s1, t1, s2, t2);
        } catch (const std::invalid_argument&) {
        }
    }
}

}  // namespace

TEST_SUITE("metaplectic") {

TEST_CASE("identity maps to the identity operator") {
    const auto g = meta::metaplectic_g(modring::sl2_identity(5));
    CHECK(g.case_tag == meta::CaseTag::identity);
    CHECK(linalg::fro_dist(g.mat, CMat::identity(5)) == 0.0);
    CHECK(meta::covariance_error(g) < 1e-12);
}

TEST_CASE("pi/2 rotation sends U to S_(0,1)") {
    const schwinger::Basis basis(5);
    const SL2Elem r(5, 0, -1, 1, 0);  // s = (0,1), t = (-1,0)
    const auto g = meta::metaplectic_g(basis, r);
    const CMat lhs = linalg::mat_mul(linalg::adjoint(g.mat),
                                     linalg::mat_mul(basis.u(), g.mat));
    CHECK(linalg::fro_dist(lhs, basis.s(0, 1)) < 1e-10);
    // this element is the metaplectic lift of the Fourier rotation: G ~ F^dag
    const CMat fd = linalg::adjoint(basis.f());
    const cd tr = linalg::trace(linalg::mat_mul(linalg::adjoint(fd), g.mat));
    CHECK(linalg::fro_dist(g.mat, linalg::scale(fd, tr / std::abs(tr))) < 1e-10);
}

TEST_CASE("unitarity over random elements at D = 5 and 13") {
    std::mt19937_64 rng(7);
    for (int d : {5, 13}) {
        const schwinger::Basis basis(d);
        for (int t = 0; t < 50; ++t) {
            const auto g = meta::metaplectic_g(basis, rand_sl2(d, rng));
            CHECK(linalg::unitarity_error(g.mat) < 1e-10);
        }
    }
}

TEST_CASE("covariance on the Schwinger basis") {
    std::mt19937_64 rng(3);
    for (int d : {5, 7}) {
        const schwinger::Basis basis(d);
        const auto g1 = meta::metaplectic_g(basis, SL2Elem(d, 1, 1, 0, 1));
        CHECK(meta::covariance_error(basis, g1) < 1e-10);
        const auto gr = meta::metaplectic_g(basis, rand_sl2(d, rng));
        CHECK(meta::covariance_error(basis, gr) < 1e-10);
    }
}

TEST_CASE("covariance on the WK basis and duality bound") {
    std::mt19937_64 rng(9);
    const int d = 5;
    const schwinger::Basis sbasis(d);
    const wk::WkBasis wbasis(d);
    for (const auto& r : modring::rotation_family(d)) {
        const auto g = meta::metaplectic_g(sbasis, r);
        CHECK(meta::wk_covariance_error(wbasis, g) < 1e-10);
    }
    const auto g = meta::metaplectic_g(sbasis, rand_sl2(d, rng));
    const double cov = meta::covariance_error(sbasis, g);
    const double wkcov = meta::wk_covariance_error(wbasis, g);
    CHECK(wkcov <= std::sqrt(double(d)) * cov + 1e-11);
    CHECK(meta::wk_covariance_error(meta::metaplectic_g(modring::sl2_identity(d))) <
          1e-12);
}

TEST_CASE("projective multiplier") {
    CHECK(std::abs(meta::projective_multiplier(modring::sl2_identity(5),
                                               modring::sl2_identity(5))
                       .multiplier -
                   cd{1, 0}) < 1e-12);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const auto fit = meta::projective_multiplier(rand_sl2(5, rng), rand_sl2(5, rng));
        CHECK(std::abs(std::abs(fit.multiplier) - 1.0) < 1e-10);
        CHECK(fit.residual < 1e-9);
    }
    for (int t = 0; t < 8; ++t) {
        const auto fit = meta::projective_multiplier(rand_sl2(13, rng), rand_sl2(13, rng));
        CHECK(fit.residual < 1e-9);
    }
}

TEST_CASE("inverse equals adjoint up to phase; projective order of g3") {
    std::mt19937_64 rng(13);
    const int d = 5;
    const schwinger::Basis basis(d);
    for (int t = 0; t < 8; ++t) {
        const auto r = rand_sl2(d, rng);
        const CMat gi = meta::metaplectic_g(basis, modring::sl2_inv(r)).mat;
        const CMat gd = linalg::adjoint(meta::metaplectic_g(basis, r).mat);
        const cd tr = linalg::trace(linalg::mat_mul(linalg::adjoint(gd), gi));
        CHECK(linalg::fro_dist(gi, linalg::scale(gd, tr / std::abs(tr))) < 1e-9);
    }
    for (const auto& r : modring::rotation_family(d)) {
        const auto g = meta::metaplectic_g(basis, r);
        const int ord = meta::projective_order(g);
        CHECK(modring::sl2_order(r) % ord == 0);  // divides the 4k cycle
    }
}

TEST_CASE("domain guard rejects non-prime and even dimensions") {
    CHECK_THROWS_AS(meta::metaplectic_g(modring::sl2_identity(6)), std::invalid_argument);
    CHECK_THROWS_AS(meta::metaplectic_g(modring::sl2_identity(9)), std::invalid_argument);
}

TEST_CASE("case tags follow the entries of r") {
    const schwinger::Basis basis(5);
    CHECK(meta::metaplectic_g(basis, SL2Elem(5, 0, -1, 1, 0)).case_tag ==
          meta::CaseTag::generic);
    // delta = 0, t1 != 0: upper shear is the parabolic branch
    CHECK(meta::metaplectic_g(basis, SL2Elem(5, 1, 2, 0, 1)).case_tag ==
          meta::CaseTag::parabolic);
    // delta = 0, t1 = 0, s2 != 0: lower shear
    CHECK(meta::metaplectic_g(basis, SL2Elem(5, 1, 0, 2, 1)).case_tag ==
          meta::CaseTag::diagonal);
    CHECK(meta::covariance_error(basis, meta::metaplectic_g(basis, SL2Elem(5, 1, 0, 2, 1))) < 1e-10);
    CHECK(meta::covariance_error(basis, meta::metaplectic_g(basis, SL2Elem(5, 1, 2, 0, 1))) < 1e-10);
}

}  // TEST_SUITE
