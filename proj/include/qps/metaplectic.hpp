#pragma once

// Gauss-sum construction of the unitary generator G(R) of discrete linear
// canonical transformations, for D an odd prime of the form 4k +/- 1.
//
// Contract: G(R)^dag S_m G(R) = S_{R:m} with R:m = (s1 m1 + t1 m2,
// s2 m1 + t2 m2), exactly (trivial multiplier). The closed-form Gauss-sum
// expansion natively generates the transpose-inverse action, so the
// constructor evaluates it at R^{-T}. On the dual basis the induced action is
// Delta(n) -> Delta(R:n); with sl2_mul's action ordering the lift is
// projectively homomorphic: G(r1) G(r2) ~ G(sl2_mul(r1, r2)).

#include <optional>
#include <string>

#include "qps/modring.hpp"
#include "qps/schwinger.hpp"
#include "qps/wk.hpp"

namespace qps::meta {

using linalg::CMat;
using linalg::cd;
using modring::SL2Elem;

enum class CaseTag { generic, parabolic, diagonal, identity };
const char* case_name(CaseTag tag);

struct MetaplecticOp {
    SL2Elem r;
    int d;
    CMat mat;
    CaseTag case_tag;
};

// requires d odd prime; throws otherwise
MetaplecticOp metaplectic_g(const SL2Elem& r);
MetaplecticOp metaplectic_g(const schwinger::Basis& basis, const SL2Elem& r);

// max over all m of ||G^dag S_m G - S_{R:m}||_F
double covariance_error(const MetaplecticOp& g);
double covariance_error(const schwinger::Basis& basis, const MetaplecticOp& g);

// max over all n of ||G^dag Delta(n) G - Delta(R:n)||_F
double wk_covariance_error(const MetaplecticOp& g);
double wk_covariance_error(const wk::WkBasis& basis, const MetaplecticOp& g);

// unit-modulus lambda minimizing ||G(r1)G(r2) - lambda G(r1 r2)||_F, with the
// post-extraction residual; residual above tol flags a construction bug
struct ProjectiveFit {
    cd multiplier;
    double residual;
};
ProjectiveFit projective_multiplier(const SL2Elem& r1, const SL2Elem& r2);

// least k with G(r)^k proportional to the identity, together with the phase
int projective_order(const MetaplecticOp& g, double tol = 1e-9);

}  // namespace qps::meta
