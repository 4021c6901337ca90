#pragma once

// Cyclic clock/shift pair (U,V), the Schwinger operator basis S_m and the
// discrete Fourier operator.
//
// Conventions. In the computational |u>_k basis,
//     U e_k = e_{k+1 (mod D)},   V = diag(e^{-i g0 k}),   g0 = 2 pi / D,
// and S_m = phase(m) U^{m1} V^{m2} with the symmetrizing half-phase
// e^{-i g0 m1 m2 / 2}. The "half" is representation-dependent:
//   * odd D:  the half is 2^{-1} (mod D). S_m is then D-periodic in both
//     labels and every algebraic identity (adjoint, composition, duality)
//     closes with plain mod-D label arithmetic.
//   * even D: 2 is not invertible; the half is the literal real division.
//     S_m is 2D-periodic in its labels (adding D to one label flips the sign
//     when the other label is odd) and the identities close with integer
//     label arithmetic instead.
// composition_phase below returns the cocycle in the matching convention.

#include <utility>

#include "qps/linalg.hpp"

namespace qps::schwinger {

using linalg::CMat;
using linalg::cd;

// integer label pair reduced to the canonical range [0,D)
struct PhaseVec {
    int d;
    int m1, m2;
    PhaseVec(int d_, long long m1_, long long m2_);
    long long cross(const PhaseVec& o) const {  // m x n = m1 n2 - m2 n1
        return static_cast<long long>(m1) * o.m2 - static_cast<long long>(m2) * o.m1;
    }
};

double gamma0(int d);

// U (cyclic shift) and V (clock) acting on the computational basis
std::pair<CMat, CMat> clock_shift(int d);

// S_m for arbitrary integer labels, in the parity-appropriate convention
CMat schwinger_s(int d, long long m1, long long m2);
CMat schwinger_s(const PhaseVec& m);

// the scalar c with S_m S_n = c * S_{m+n} (labels composed as integers)
cd composition_phase(int d, long long m1, long long m2, long long n1, long long n2);

// unitary DFT, (F)_{k,k'} = (1/sqrt D) e^{-i g0 k k'}
CMat fourier(int d);

// eigenvalue multiplicities of fourier(d) over {1, -1, -i, i}
struct DftMultiplicities {
    int plus_one, minus_one, minus_i, plus_i;
};
DftMultiplicities dft_multiplicities(int d);

// Cached basis for a fixed dimension: all D^2 canonical S_m plus U, V, F.
// Matrices are built once; shared const access afterwards.
class Basis {
  public:
    explicit Basis(int d);
    int dim() const { return d_; }
    const CMat& s(int m1, int m2) const;  // canonical labels
    const CMat& u() const { return u_; }
    const CMat& v() const { return v_; }
    const CMat& f() const { return f_; }

  private:
    int d_;
    CMat u_, v_, f_;
    std::vector<CMat> s_;
};

}  // namespace qps::schwinger
