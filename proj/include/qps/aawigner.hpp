#pragma once

// Action-angle Wigner machinery in the number-phase realization: shifted Fock
// vectors, the Delta_CT(J, theta) operator, the AA Wigner function with its
// marginals, WWM symbols, diagonal-spectrum evolution and the Moyal equation
// of motion.
//
// W(J, theta) is evaluated from the k-sum over coherence cells
// (a, b) = (J + k/2, J - k/2) restricted to integer, in-range indices (the
// parity of k matches the parity of 2J and no cyclic wrap is applied). On the
// half-integer J grid this reproduces the closed forms for Fock and split
// states exactly, makes the theta marginal |sum_a psi_a e^{-i a theta}|^2 / 2pi
// nonnegative, and turns the Moyal equation into a cell-wise identity.

#include <string>
#include <vector>

#include "qps/qosc.hpp"
#include "qps/wk.hpp"

namespace qps::aa {

using linalg::CMat;
using linalg::cd;
using wk::StateVec;

// polynomial spectrum n -> H(n), coefficients in ascending powers
struct SpectrumFn {
    std::vector<double> coeffs;
    double eval(double n) const;
    int degree() const;
};

// |n + beta> in the continuously shifted Fock space F^(beta), beta in [0,1)
std::vector<cd> shifted_fock(int d, int n, double beta);

// Delta_CT(J, theta) = (1/2piD) sum over the symmetric label domain of
// e^{i(g0 m1 J - m2 theta)} e^{-i g0 m1 m2 / 2} E_N^{m1} E_phi^{m2}
CMat delta_ct(int d, double j, double theta);

// the AA Wigner function; 2J must be an integer
double aa_wigner(const StateVec& psi, double j, double theta);

struct AAGrid {
    int d;
    std::vector<double> j_values;      // {0, 1/2, ..., D - 1/2}
    std::vector<double> theta_values;  // uniform on [0, 2pi), T samples
    std::vector<double> w;             // row-major (2d) x T
    double& at(int j2, int t) { return w[static_cast<std::size_t>(j2) * theta_values.size() + t]; }
    double at(int j2, int t) const { return w[static_cast<std::size_t>(j2) * theta_values.size() + t]; }
};

// default theta sampling T = 4d
AAGrid aa_wigner_grid(const StateVec& psi, int t_samples = 0);

struct Marginals {
    std::vector<double> p_j;      // one entry per half-integer grid point
    std::vector<double> p_theta;  // one entry per theta sample
};
// P(J) = int dtheta W (trapezoid on the periodic grid); Ptilde(theta) = sum_J W
Marginals aa_marginals(const StateVec& psi, const AAGrid& grid);

// WWM symbol f(J, theta) = 2pi Tr{F Delta_CT(J, theta)} over the grid points
std::vector<cd> wwm_symbol(const CMat& f, const AAGrid& grid);
cd wwm_symbol_at(const CMat& f, double j, double theta);

// amps_n(t) = e^{-i H(n) t} amps_n(0)
StateVec evolve(const StateVec& psi0, const SpectrumFn& h, double t);

// d/dt W = -i { H(J + (i/2) d_theta) - H(J - (i/2) d_theta) } W, theta
// derivative applied spectrally on the uniform grid; H polynomial, deg <= 4
AAGrid moyal_rhs(const AAGrid& w, const SpectrumFn& h);

// Heisenberg-picture check of the phase-operator equation of motion.
// For each n the nonzero element of E^r sits at n' = n - r (mod D) and
// rotates at freq_direct = H(n) - H(n - r); the literal index convention
// gives freq_literal = H(n + r) - H(n). Both are reported; they agree
// exactly for linear spectra on non-wrapping elements.
struct EomRow {
    int n, n_prime;
    bool wraps;
    double freq_direct, freq_literal;
    double fd_residual;     // |i d/dt element - (-element * (H(n') - H(n)))|
    bool literal_matches;   // |freq_direct - freq_literal| <= 1e-9
};
std::vector<EomRow> phase_op_eom_check(int d, const SpectrumFn& h, int r,
                                       const std::vector<double>& t_samples);

}  // namespace qps::aa
