#pragma once

// Continuous SL(2,R) structure at three computable levels: the 2x2
// one-parameter subgroup matrices, exact finite-dimensional polynomial
// representations of the generators K1, K2, K3, and finite-difference
// verification of the phase-space eigenfunctions.
//
// On the monomial basis u^{l+m} v^{l-m} (u = a1 + i a2, v = a1 - i a2) the
// generators act through E+ = u d/dv, E- = v d/du, H = u d/du - v d/dv as
//   K1 = (E- - E+)/2,  K2 = H/2,  K3 = -i(E+ + E-)/2.
// The ladder pair consistent with the tested relations is K+/- = K1 -/+ i K3
// (K+ = -E+, K- = E-), and the invariant with eigenvalue l(l+1) is
// K2^2 - K1^2 - K3^2 (K2 is the compact direction).

#include <complex>
#include <functional>
#include <vector>

#include "qps/linalg.hpp"

namespace qps::sl2r {

using linalg::CMat;
using linalg::cd;

struct Mat2 {
    double a11, a12, a21, a22;
    double det() const { return a11 * a22 - a12 * a21; }
};
Mat2 mat2_mul(const Mat2& x, const Mat2& y);
std::pair<double, double> mat2_apply(const Mat2& x, double v1, double v2);

// Omega_j(param): j=1 boost, j=2 rotation, j=3 squeeze. Principal parameter
// ranges are psi in R, theta in (-pi, pi], phi in [-pi, pi]; values outside
// are accepted and wrap in the usual trigonometric sense.
Mat2 subgroup_matrix(int j, double param);
// 2x2 generators k_j = d/dt Omega_j(t)|_0; K_j = -i k_j satisfies the K-algebra
Mat2 subgroup_generator(int j);

struct PolyRep {
    int two_ell;  // 2l
    CMat k1, k2, k3;
    CMat kplus() const;   // K1 - i K3
    CMat kminus() const;  // K1 + i K3
    CMat casimir() const; // K2^2 - K1^2 - K3^2 = l(l+1) I
};
PolyRep poly_rep(int two_ell);

// uniform rectangle of sample points for finite-difference checks
struct GridSpec {
    double a1_lo, a1_hi, a2_lo, a2_hi;
    int n1 = 8, n2 = 8;
    double h = 1e-3;  // centered-difference step
};

// l = 0 phase-space eigenfunctions of K_j (unnormalized)
cd eigenfunction(int j, double a1, double a2, double gamma);

// K_j by second-order centered differences applied to f at (a1, a2)
cd apply_generator_fd(int j, const std::function<cd(double, double)>& f,
                      double a1, double a2, double h);

// max relative residual |K_j e - gamma e|/|e| over the grid; throws when the
// grid comes within 4h of the j-th singular locus
double grid_eigencheck(int j, double gamma, const GridSpec& grid);

struct Sl2rParam {
    double lambda1, lambda2, lambda3;
    double invariant() const {  // Lambda^2, signed
        return lambda1 * lambda1 + lambda3 * lambda3 - lambda2 * lambda2;
    }
};

enum class FactorMode { elliptic, hyperbolic };

struct FactorResult {
    double a, b;        // subgroup parameters (a', b' in the hyperbolic mode)
    double lambda;      // the invariant scale
    double conj_residual;     // 2x2 conjugation identity residual
    double reconstruction;    // |Lambda(a,b,lambda) - input|
};

// Solves the factored parameterization and verifies, at the 2x2 level, that
// exp(L1 k1 + L2 k2 + L3 k3) = W exp(lambda k_axis) W^{-1} with
//   elliptic:   axis = k3, W = Omega3(b) Omega2(-a)
//   hyperbolic: axis = k2, W = Omega2(-b) Omega1(-a)
FactorResult factor_lambda(const Sl2rParam& p, FactorMode mode);

// transported eigenfunction h(alpha, gamma) = e3(Omega2(a) Omega3(b) alpha)
cd h_chi_eval(double a1, double a2, double gamma, double a, double b);
// finite-difference residual of the Lambda-direction eigen-relation for h_chi
double h_chi_eigen_residual(double gamma, double a, double b,
                            const GridSpec& grid);

// truncated-Fock QHO generators K1 = (x^2-p^2)/4, K2 = (x^2+p^2)/4,
// K3 = (xp+px)/4 on an M-dimensional number basis
struct QhoGenerators {
    CMat k1, k2, k3;
};
QhoGenerators qho_generators(int m);

}  // namespace qps::sl2r
