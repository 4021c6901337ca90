#include <doctest.h>

#include <random>

#include "qps/linalg.hpp"
#include "qps/schwinger.hpp"

using namespace qps;
using linalg::CMat;
using linalg::cd;

namespace {

CMat rand_mat(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMat m(n);
    for (auto& z : m.a) z = cd{u(rng), u(rng)};
    return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("mat_mul identity and unitarity") {
    const CMat i4 = CMat::identity(4);
    CHECK(linalg::fro_dist(linalg::mat_mul(i4, i4), i4) == 0.0);
    const CMat f = schwinger::fourier(6);
    CHECK(linalg::fro_dist(linalg::mat_mul(f, linalg::adjoint(f)), CMat::identity(6)) <
          1e-13);
}

TEST_CASE("mat_mul matches the naive triple-loop oracle") {
    std::mt19937_64 rng(42);
    const CMat a = rand_mat(3, rng), b = rand_mat(3, rng);
    CMat ref(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            cd s{0, 0};
            for (int k = 0; k < 3; ++k) s += a.at(i, k) * b.at(k, j);
            ref.at(i, j) = s;
        }
    CHECK(linalg::fro_dist(ref, linalg::mat_mul(a, b)) < 1e-14);
}

TEST_CASE("mat_mul rejects dimension mismatch") {
    CHECK_THROWS_AS(linalg::mat_mul(CMat(2), CMat(3)), std::invalid_argument);
}

TEST_CASE("adjoint involution and conjugation") {
    std::mt19937_64 rng(7);
    const CMat a = rand_mat(5, rng);
    CHECK(linalg::fro_dist(linalg::adjoint(linalg::adjoint(a)), a) == 0.0);
    CHECK(linalg::fro_dist(linalg::adjoint(CMat::identity(3)), CMat::identity(3)) == 0.0);
    const CMat di = CMat::diag({cd{0, 1}, cd{0, 1}});
    CHECK(linalg::fro_dist(linalg::adjoint(di), CMat::diag({cd{0, -1}, cd{0, -1}})) ==
          0.0);
}

TEST_CASE("trace basics and cyclicity") {
    CHECK(linalg::trace(CMat::identity(9)) == cd{9.0, 0.0});
    CHECK(linalg::trace(CMat(5)) == cd{0.0, 0.0});
    std::mt19937_64 rng(3);
    const CMat a = rand_mat(4, rng), b = rand_mat(4, rng);
    CHECK(std::abs(linalg::trace(linalg::mat_mul(a, b)) -
                   linalg::trace(linalg::mat_mul(b, a))) < 1e-13);
}

TEST_CASE("SIMD kernels agree with the scalar reference") {
    std::mt19937_64 rng(11);
    for (int n : {1, 2, 3, 4, 5, 7, 8, 16, 17, 33}) {
        const CMat a = rand_mat(n, rng), b = rand_mat(n, rng);
        CMat ref(n), got(n);
        kernels::matmul_scalar(a.a.data(), b.a.data(), ref.a.data(), n);
        kernels::active_matmul()(a.a.data(), b.a.data(), got.a.data(), n);
        CHECK(linalg::fro_dist(ref, got) < 1e-12);

        CMat y1 = a, y2 = a;
        const cd alpha{0.3, -1.2};
        kernels::axpy_scalar(y1.a.data(), alpha, b.a.data(), y1.a.size());
        kernels::active_axpy()(y2.a.data(), alpha, b.a.data(), y2.a.size());
        CHECK(linalg::fro_dist(y1, y2) < 1e-12);
    }
}

TEST_CASE("eig_unitary on diagonal input") {
    const CMat a = CMat::diag({cd{1, 0}, cd{0, 1}, cd{0, 1}});
    const auto pairs = linalg::eig_unitary(a);
    REQUIRE(pairs.size() == 2);
    CHECK(std::abs(pairs[0].eigenvalue - cd{1, 0}) < 1e-12);
    CHECK(pairs[0].multiplicity == 1);
    CHECK(std::abs(pairs[1].eigenvalue - cd{0, 1}) < 1e-12);
    CHECK(pairs[1].multiplicity == 2);
}

TEST_CASE("eig_unitary on the 2x2 swap") {
    CMat swap(2);
    swap.at(0, 1) = swap.at(1, 0) = cd{1, 0};
    const auto pairs = linalg::eig_unitary(swap);
    REQUIRE(pairs.size() == 2);
    // hand eigendecomposition: eigenvalues +1 and -1, each simple
    CHECK(std::abs(pairs[0].eigenvalue - cd{1, 0}) < 1e-12);
    CHECK(std::abs(pairs[1].eigenvalue - cd{-1, 0}) < 1e-12);
    CHECK(pairs[0].multiplicity == 1);
    CHECK(pairs[1].multiplicity == 1);
}

TEST_CASE("eig_unitary identity multiplicity") {
    const auto pairs = linalg::eig_unitary(CMat::identity(5));
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].multiplicity == 5);
}

TEST_CASE("eig_unitary merges clusters straddling the phase cut") {
    // eigenvalues e^{+i eps} and e^{-i eps} sit on both sides of phase 0
    const double eps = 1e-10;
    const CMat a = CMat::diag({std::polar(1.0, eps), std::polar(1.0, -eps), cd{0, 1}});
    const auto pairs = linalg::eig_unitary(a, 1e-8, 1e-8);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].multiplicity == 2);
    CHECK(std::abs(pairs[0].eigenvalue - cd{1, 0}) < 1e-9);
    CHECK(pairs[1].multiplicity == 1);
}

TEST_CASE("eig_unitary rejects non-unitary input") {
    CMat bad = CMat::identity(3);
    bad.at(0, 0) = cd{2.0, 0.0};
    CHECK_THROWS_AS(linalg::eig_unitary(bad), std::invalid_argument);
}

TEST_CASE("eig_unitary reconstruction property") {
    const CMat f = schwinger::fourier(12);
    const auto full = linalg::eig_unitary_full(f);
    const CMat rec = linalg::mat_mul(
        full.vectors,
        linalg::mat_mul(CMat::diag(full.eigenvalues), linalg::adjoint(full.vectors)));
    CHECK(linalg::fro_dist(rec, f) < 1e-9 * 12);
    CHECK(linalg::unitarity_error(full.vectors) < 1e-10 * 12);
}

TEST_CASE("expm_small basics") {
    CHECK(linalg::fro_dist(linalg::expm_small(CMat(3)), CMat::identity(3)) == 0.0);
    const CMat e = linalg::expm_small(CMat::diag({cd{0, 3.14159265358979323846}}));
    CHECK(std::abs(e.at(0, 0) - cd{-1, 0}) < 1e-13);
}

TEST_CASE("expm_small reproduces the boost subgroup") {
    // exp(psi X1) with X1 = [[0,1],[1,0]]/2
    const double psi = 0.8;
    CMat x1(2);
    x1.at(0, 1) = x1.at(1, 0) = cd{0.5, 0};
    const CMat e = linalg::expm_small(linalg::scale(x1, cd{psi, 0}));
    CHECK(std::abs(e.at(0, 0) - cd{std::cosh(psi / 2), 0}) < 1e-13);
    CHECK(std::abs(e.at(0, 1) - cd{std::sinh(psi / 2), 0}) < 1e-13);
    CHECK(std::abs(e.at(1, 0) - cd{std::sinh(psi / 2), 0}) < 1e-13);
    CHECK(std::abs(e.at(1, 1) - cd{std::cosh(psi / 2), 0}) < 1e-13);
}

TEST_CASE("expm_small accuracy against the spectral route") {
    // skew-Hermitian exponent: compare with V e^{i diag} V^dag
    const CMat f = schwinger::fourier(8);
    std::vector<cd> ph(8);
    for (int k = 0; k < 8; ++k) ph[k] = cd{0, 0.37 * k - 1.1};
    const CMat h = linalg::mat_mul(f, linalg::mat_mul(CMat::diag(ph), linalg::adjoint(f)));
    std::vector<cd> eph(8);
    for (int k = 0; k < 8; ++k) eph[k] = std::exp(ph[k]);
    const CMat want =
        linalg::mat_mul(f, linalg::mat_mul(CMat::diag(eph), linalg::adjoint(f)));
    CHECK(linalg::fro_dist(linalg::expm_small(h), want) < 1e-12);
}

}  // TEST_SUITE
