#pragma once

// Admissible q-oscillator at q = e^{-i g0 kappa} a D-th root of unity, the
// u_q(sl2) realization built on the Schwinger basis, and the unitary phase
// operator E_phi with its eigenbasis.
//
// The number operator enters through Q = q^{-N-(D-1)/2}, the form that
// closes the deformed algebra with the lowering phase operator; the plain
// q^N differs by a constant spectral offset and reverses the commutation
// sign.

#include <map>
#include <string>
#include <vector>

#include "qps/schwinger.hpp"

namespace qps::qosc {

using linalg::CMat;
using linalg::cd;

struct QOscillator {
    int d;
    int kappa;
    cd q;                  // e^{-i g0 kappa}
    double big_c;          // 1 / |sin(g0 kappa)|
    std::vector<double> f; // structure function, f(n) >= 0, f(n) = f(n+D)
    CMat a, adag, qop;     // lowering, raising, Q = diag(q^{-n-(D-1)/2})
};

// d odd >= 3, kappa in 1..d-1
QOscillator build_qosc(int d, int kappa);

// Frobenius residuals of the three deformed-algebra relations:
//   "AQ"   : A Q - q^{-1} Q A
//   "AdA"  : A^dag A - (C + [N])         with [N] = (Q^{-1}-Q)/(q-q^{-1})
//   "AAd"  : A A^dag - q A^dag A - ((1-q) C + Q)
std::map<std::string, double> qosc_algebra_residuals(const QOscillator& o);

struct UqSl2 {
    cd q;        // e^{-i g0 kappa}, kappa = m x m' mod d
    cd q_half;   // the modular square root e^{-i g0 <2^{-1} kappa>}
    CMat jminus, jplus, l;
};

// J- = c (S_m + S_m'), J+ = J-^dag, L = S_{m-m'}, with the real coefficient
// c = 1/(2 |sin(g0 <2^{-1} kappa>)|) satisfying the u_q(sl2) constraint.
UqSl2 uqsl2_from_schwinger(int d, const schwinger::PhaseVec& m,
                           const schwinger::PhaseVec& mprime);

struct PhaseOp {
    int d;
    CMat e;             // cyclic lowering permutation |n> -> |n-1 mod D>
    CMat phase_states;  // columns |phi>_r = (1/sqrt D) sum_n e^{i g0 n r}|n>
};
PhaseOp phase_operator(int d);

// (i) integer-power commutation Q^Gamma E^lambda = q^{Gamma lambda} E^lambda Q^Gamma
//     (odd d only; the oscillator Q needs (d-1)/2 integral)
// (ii) matrix elements of [N, E^r]: -r on non-wrapping elements, D-r on wraps
struct NumberPhaseReport {
    bool qe_checked = false;       // false when d is even (no oscillator Q)
    double qe_residual = 0.0;      // worst over the checked integer powers
    double nonwrap_residual = 0.0; // | <n-r|[N,E^r]|n> + r | over n >= r
    double wrap_residual = 0.0;    // | <n-r+D|[N,E^r]|n> - (D-r) | over n < r
    int wrap_count = 0;
};
NumberPhaseReport number_phase_commutators(int d, int r, int kappa = 1);

}  // namespace qps::qosc
