#pragma once

// Dense complex matrix substrate. Square row-major matrices of modest size
// (target D <= 256), immutable-by-convention value types, exceptions on
// contract violations.

#include <complex>
#include <stdexcept>
#include <vector>

#include "qps/kernels.hpp"

namespace qps::linalg {

using cd = std::complex<double>;

struct CMat {
    int dim = 0;
    std::vector<cd> a;  // row-major, dim*dim entries

    CMat() = default;
    explicit CMat(int d) : dim(d), a(static_cast<std::size_t>(d) * d, cd{0.0, 0.0}) {
        if (d <= 0) throw std::invalid_argument("CMat: dim must be positive");
    }

    cd& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
    const cd& at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }

    static CMat identity(int d);
    static CMat diag(const std::vector<cd>& entries);

    bool finite() const;
};

CMat mat_mul(const CMat& a, const CMat& b);
CMat adjoint(const CMat& a);
cd trace(const CMat& a);

CMat add(const CMat& a, const CMat& b);
CMat sub(const CMat& a, const CMat& b);
CMat scale(const CMat& a, cd alpha);
// y += alpha * x, in place (the axpy kernel).
void accumulate(CMat& y, cd alpha, const CMat& x);

double fro_norm(const CMat& a);
double fro_dist(const CMat& a, const CMat& b);
// ||a^dag a - I||_F
double unitarity_error(const CMat& a);

std::vector<cd> mat_vec(const CMat& a, const std::vector<cd>& v);
// a^k for integer k (k < 0 uses the adjoint, valid for unitary a).
CMat unitary_pow(const CMat& a, long long k);

struct EigPair {
    cd eigenvalue;          // on the unit circle (cluster representative)
    int multiplicity = 0;
    std::vector<cd> basis;  // column-major dim x multiplicity orthonormal block
};

// Eigendecomposition of a unitary matrix via its commuting Hermitian parts
// (A+A^dag)/2 and (A-A^dag)/(2i), each diagonalized by cyclic complex Jacobi.
// Eigenvalues are clustered by phase angle within cluster_tol and returned
// sorted by phase in [0, 2pi). Throws if ||a^dag a - I||_F > tol.
std::vector<EigPair> eig_unitary(const CMat& a, double tol = 1e-8,
                                 double cluster_tol = 1e-8);

// Full eigenvector matrix (columns) and eigenvalues, same order as eig_unitary
// clusters; convenience for reconstruction tests.
struct EigDecomp {
    std::vector<cd> eigenvalues;  // dim entries
    CMat vectors;                 // columns are eigenvectors
};
EigDecomp eig_unitary_full(const CMat& a, double tol = 1e-8,
                           double cluster_tol = 1e-8);

// Hermitian eigensolver (cyclic complex Jacobi); ascending eigenvalues.
void eig_hermitian(const CMat& h, std::vector<double>& evals, CMat& evecs);

// Matrix exponential by scaling-and-squaring with a Taylor core; intended for
// dim <= 64 and ||a|| <= 10.
CMat expm_small(const CMat& a);

}  // namespace qps::linalg
