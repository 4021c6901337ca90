#include "qps/sl2r.hpp"

#include <cmath>
#include <stdexcept>

namespace qps::sl2r {

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

std::pair<double, double> mat2_apply(const Mat2& x, double v1, double v2) {
    return {x.a11 * v1 + x.a12 * v2, x.a21 * v1 + x.a22 * v2};
}

Mat2 subgroup_matrix(int j, double p) {
    switch (j) {
        case 1:
            return {std::cosh(p / 2), std::sinh(p / 2), std::sinh(p / 2),
                    std::cosh(p / 2)};
        case 2:
            return {std::cos(p / 2), std::sin(p / 2), -std::sin(p / 2),
                    std::cos(p / 2)};
        case 3:
            return {std::exp(p / 2), 0.0, 0.0, std::exp(-p / 2)};
        default:
            throw std::invalid_argument("subgroup_matrix: j must be 1, 2 or 3");
    }
}

Mat2 subgroup_generator(int j) {
    switch (j) {
        case 1: return {0.0, 0.5, 0.5, 0.0};
        case 2: return {0.0, 0.5, -0.5, 0.0};
        case 3: return {0.5, 0.0, 0.0, -0.5};
        default:
            throw std::invalid_argument("subgroup_generator: j must be 1, 2 or 3");
    }
}

PolyRep poly_rep(int two_ell) {
    if (two_ell < 0) throw std::invalid_argument("poly_rep: 2l must be >= 0");
    const int dim = two_ell + 1;
    CMat eplus(dim), eminus(dim), h(dim);
    for (int i = 0; i < dim; ++i) {
        h.at(i, i) = cd{static_cast<double>(2 * i - two_ell), 0.0};
        if (i + 1 < dim) eplus.at(i + 1, i) = cd{static_cast<double>(two_ell - i), 0.0};
        if (i - 1 >= 0) eminus.at(i - 1, i) = cd{static_cast<double>(i), 0.0};
    }
    PolyRep rep;
    rep.two_ell = two_ell;
    rep.k1 = linalg::scale(linalg::sub(eminus, eplus), cd{0.5, 0.0});
    rep.k2 = linalg::scale(h, cd{0.5, 0.0});
    rep.k3 = linalg::scale(linalg::add(eplus, eminus), cd{0.0, -0.5});
    return rep;
}

CMat PolyRep::kplus() const {
    return linalg::sub(k1, linalg::scale(k3, cd{0.0, 1.0}));
}
CMat PolyRep::kminus() const {
    return linalg::add(k1, linalg::scale(k3, cd{0.0, 1.0}));
}
CMat PolyRep::casimir() const {
    CMat c = linalg::mat_mul(k2, k2);
    linalg::accumulate(c, cd{-1.0, 0.0}, linalg::mat_mul(k1, k1));
    linalg::accumulate(c, cd{-1.0, 0.0}, linalg::mat_mul(k3, k3));
    return c;
}

cd eigenfunction(int j, double a1, double a2, double gamma) {
    switch (j) {
        case 1:
            return std::pow(cd{(a1 + a2) / (a1 - a2), 0.0}, cd{0.0, gamma});
        case 2:
            return std::pow(cd{a1, a2} / cd{a1, -a2}, cd{gamma, 0.0});
        case 3:
            return std::pow(cd{a1 / a2, 0.0}, cd{0.0, gamma});
        default:
            throw std::invalid_argument("eigenfunction: j must be 1, 2 or 3");
    }
}

cd apply_generator_fd(int j, const std::function<cd(double, double)>& f,
                      double a1, double a2, double h) {
    const cd d1 = (f(a1 + h, a2) - f(a1 - h, a2)) / (2.0 * h);
    const cd d2 = (f(a1, a2 + h) - f(a1, a2 - h)) / (2.0 * h);
    const cd mihalf{0.0, -0.5};
    switch (j) {
        case 1: return mihalf * (a1 * d2 + a2 * d1);
        case 2: return mihalf * (a1 * d2 - a2 * d1);
        case 3: return mihalf * (a1 * d1 - a2 * d2);
        default:
            throw std::invalid_argument("apply_generator_fd: j must be 1, 2 or 3");
    }
}

namespace {

void check_margin(int j, double a1, double a2, double h) {
    const double margin = 4.0 * h;
    bool ok = true;
    switch (j) {
        case 1: ok = std::abs(a1 - a2) > margin && std::abs(a1 + a2) > margin; break;
        case 2: ok = std::hypot(a1, a2) > margin; break;
        case 3: ok = a1 > margin && a2 > margin; break;  // positive quadrant branch
        default: ok = false;
    }
    if (!ok)
        throw std::invalid_argument("grid intersects the singular locus for j");
}

}  // namespace

double grid_eigencheck(int j, double gamma, const GridSpec& grid) {
    double worst = 0.0;
    auto f = [&](double x, double y) { return eigenfunction(j, x, y, gamma); };
    for (int i1 = 0; i1 < grid.n1; ++i1)
        for (int i2 = 0; i2 < grid.n2; ++i2) {
            const double a1 = grid.a1_lo + (grid.a1_hi - grid.a1_lo) *
                                               (grid.n1 == 1 ? 0.5 : double(i1) / (grid.n1 - 1));
            const double a2 = grid.a2_lo + (grid.a2_hi - grid.a2_lo) *
                                               (grid.n2 == 1 ? 0.5 : double(i2) / (grid.n2 - 1));
            check_margin(j, a1, a2, grid.h);
            const cd v = f(a1, a2);
            const cd r = apply_generator_fd(j, f, a1, a2, grid.h);
            worst = std::max(worst, std::abs(r - gamma * v) / std::abs(v));
        }
    return worst;
}

namespace {

CMat mat2_to_cmat(const Mat2& m) {
    CMat c(2);
    c.at(0, 0) = cd{m.a11, 0};
    c.at(0, 1) = cd{m.a12, 0};
    c.at(1, 0) = cd{m.a21, 0};
    c.at(1, 1) = cd{m.a22, 0};
    return c;
}

double conj_residual(const Sl2rParam& p, double lambda, int axis, const Mat2& w) {
    const Mat2 k1 = subgroup_generator(1), k2 = subgroup_generator(2),
               k3 = subgroup_generator(3);
    CMat m(2);
    linalg::accumulate(m, cd{p.lambda1, 0}, mat2_to_cmat(k1));
    linalg::accumulate(m, cd{p.lambda2, 0}, mat2_to_cmat(k2));
    linalg::accumulate(m, cd{p.lambda3, 0}, mat2_to_cmat(k3));
    const CMat lhs = linalg::expm_small(m);
    const CMat axis_exp =
        linalg::expm_small(linalg::scale(mat2_to_cmat(axis == 3 ? k3 : k2), cd{lambda, 0}));
    const Mat2 winv{w.a22, -w.a12, -w.a21, w.a11};  // det = 1
    const CMat rhs = linalg::mat_mul(
        mat2_to_cmat(w), linalg::mat_mul(axis_exp, mat2_to_cmat(winv)));
    return linalg::fro_dist(lhs, rhs);
}

}  // namespace

FactorResult factor_lambda(const Sl2rParam& p, FactorMode mode) {
    FactorResult out{0, 0, 0, 0, 0};
    if (mode == FactorMode::elliptic) {
        const double l2 = p.invariant();
        if (l2 <= 0)
            throw std::invalid_argument("factor_lambda: elliptic mode needs Lambda^2 > 0");
        if (p.lambda1 * p.lambda1 < p.lambda2 * p.lambda2 - 1e-15)
            throw std::invalid_argument(
                "factor_lambda: |Lambda_1| >= |Lambda_2| required by the elliptic chart");
        const double lambda = std::sqrt(l2);
        const double sin_a_mag =
            std::sqrt(std::max(0.0, p.lambda1 * p.lambda1 - p.lambda2 * p.lambda2)) / lambda;
        const double sin_a = p.lambda1 >= 0 ? sin_a_mag : -sin_a_mag;
        const double a = std::atan2(sin_a, p.lambda3 / lambda);
        const double b =
            (std::abs(p.lambda1) < 1e-300) ? 0.0 : std::atanh(p.lambda2 / p.lambda1);
        out.a = a;
        out.b = b;
        out.lambda = lambda;
        const Sl2rParam rec{lambda * std::sin(a) * std::cosh(b),
                            lambda * std::sin(a) * std::sinh(b),
                            lambda * std::cos(a)};
        out.reconstruction = std::hypot(rec.lambda1 - p.lambda1,
                                        std::hypot(rec.lambda2 - p.lambda2,
                                                   rec.lambda3 - p.lambda3));
        const Mat2 w = mat2_mul(subgroup_matrix(3, b), subgroup_matrix(2, -a));
        out.conj_residual = conj_residual(p, lambda, 3, w);
        return out;
    }
    // hyperbolic chart: L1 = L sinh a' sin b', L2 = L cosh a', L3 = L sinh a' cos b'
    const double l2 = p.invariant();
    if (l2 >= 0)
        throw std::invalid_argument("factor_lambda: hyperbolic mode needs Lambda^2 < 0");
    double lambda = std::sqrt(-l2);
    if (p.lambda2 < 0) lambda = -lambda;  // cosh a' >= 1 fixes sign(lambda) = sign(L2)
    const double cosh_a = p.lambda2 / lambda;
    const double sinh_a = std::sqrt(std::max(0.0, cosh_a * cosh_a - 1.0));
    const double a = std::asinh(sinh_a);
    const double b = (sinh_a < 1e-300) ? 0.0 : std::atan2(p.lambda1 / lambda, p.lambda3 / lambda);
    out.a = a;
    out.b = b;
    out.lambda = lambda;
    const Sl2rParam rec{lambda * std::sinh(a) * std::sin(b), lambda * std::cosh(a),
                        lambda * std::sinh(a) * std::cos(b)};
    out.reconstruction =
        std::hypot(rec.lambda1 - p.lambda1,
                   std::hypot(rec.lambda2 - p.lambda2, rec.lambda3 - p.lambda3));
    const Mat2 w = mat2_mul(subgroup_matrix(2, -b), subgroup_matrix(1, -a));
    out.conj_residual = conj_residual(p, lambda, 2, w);
    return out;
}

cd h_chi_eval(double a1, double a2, double gamma, double a, double b) {
    const Mat2 t = mat2_mul(subgroup_matrix(2, a), subgroup_matrix(3, b));
    const auto v = mat2_apply(t, a1, a2);
    if (!(v.first > 0.0 && v.second > 0.0))
        throw std::invalid_argument("h_chi_eval: transported point off the e3 branch");
    return eigenfunction(3, v.first, v.second, gamma);
}

double h_chi_eigen_residual(double gamma, double a, double b, const GridSpec& grid) {
    const double l1 = std::sin(a) * std::cosh(b);
    const double l2 = std::sin(a) * std::sinh(b);
    const double l3 = std::cos(a);
    auto f = [&](double x, double y) { return h_chi_eval(x, y, gamma, a, b); };
    double worst = 0.0;
    for (int i1 = 0; i1 < grid.n1; ++i1)
        for (int i2 = 0; i2 < grid.n2; ++i2) {
            const double a1 = grid.a1_lo + (grid.a1_hi - grid.a1_lo) *
                                               (grid.n1 == 1 ? 0.5 : double(i1) / (grid.n1 - 1));
            const double a2 = grid.a2_lo + (grid.a2_hi - grid.a2_lo) *
                                               (grid.n2 == 1 ? 0.5 : double(i2) / (grid.n2 - 1));
            const cd v = f(a1, a2);
            const cd r = l1 * apply_generator_fd(1, f, a1, a2, grid.h) +
                         l2 * apply_generator_fd(2, f, a1, a2, grid.h) +
                         l3 * apply_generator_fd(3, f, a1, a2, grid.h);
            worst = std::max(worst, std::abs(r - gamma * v) / std::abs(v));
        }
    return worst;
}

QhoGenerators qho_generators(int m) {
    if (m < 2) throw std::invalid_argument("qho_generators: m >= 2 required");
    CMat low(m);
    for (int n = 1; n < m; ++n) low.at(n - 1, n) = cd{std::sqrt(double(n)), 0.0};
    const CMat raise = linalg::adjoint(low);
    const double s = 1.0 / std::sqrt(2.0);
    CMat x(m), pmat(m);
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        x.a[i] = s * (low.a[i] + raise.a[i]);
        pmat.a[i] = cd{0.0, 1.0} * s * (raise.a[i] - low.a[i]);
    }
    const CMat x2 = linalg::mat_mul(x, x);
    const CMat p2 = linalg::mat_mul(pmat, pmat);
    const CMat xp = linalg::mat_mul(x, pmat);
    const CMat px = linalg::mat_mul(pmat, x);
    QhoGenerators g{CMat(m), CMat(m), CMat(m)};
    for (std::size_t i = 0; i < x2.a.size(); ++i) {
        g.k1.a[i] = 0.25 * (x2.a[i] - p2.a[i]);
        g.k2.a[i] = 0.25 * (x2.a[i] + p2.a[i]);
        g.k3.a[i] = 0.25 * (xp.a[i] + px.a[i]);
    }
    return g;
}

}  // namespace qps::sl2r
