#pragma once

// Wigner-Kirkwood operator basis Delta(n), its duality with the Schwinger
// basis, and the discrete Wigner function of a state.
//
// Delta(n) = D^{-3/2} sum_{m in [0,D)^2} e^{-i g0 (m x n)} S_m. For odd D the
// D-periodic S convention makes Delta Hermitian, orthonormal and exactly
// dual to S at canonical labels. For even D no choice of D^2 labels yields a
// Hermitian basis (adding D to a label flips signs); the round trip, trace
// and completeness sum still hold exactly and are the only even-D claims.

#include <vector>

#include "qps/schwinger.hpp"

namespace qps::wk {

using linalg::CMat;
using linalg::cd;
using schwinger::PhaseVec;

struct StateVec {
    int d;
    std::vector<cd> amps;

    StateVec(int d_, std::vector<cd> amps_, bool normalized = true);
    static StateVec fock(int d, int n);
    double norm() const;
};

// full Delta table (all D^2 labels) sharing one cached Schwinger basis
class WkBasis {
  public:
    explicit WkBasis(int d);
    int dim() const { return d_; }
    const CMat& delta(int n1, int n2) const;
    const schwinger::Basis& schwinger_basis() const { return basis_; }

  private:
    int d_;
    schwinger::Basis basis_;
    std::vector<CMat> delta_;
};

CMat delta_wk(const PhaseVec& n);

// (1/sqrt D) sum_n e^{+i g0 (m x n)} Delta(n); equals schwinger_s(m) at
// canonical labels
CMat s_from_delta(const PhaseVec& m);
CMat s_from_delta(const WkBasis& basis, int m1, int m2);

// W(n) = <psi| Delta(n) |psi>. Real for odd D (Hermitian Delta); the
// imaginary residue is asserted below 1e-12 there and returned discarded.
double wigner_wk(const StateVec& psi, const PhaseVec& n);
double wigner_wk(const WkBasis& basis, const StateVec& psi, int n1, int n2);

}  // namespace qps::wk
