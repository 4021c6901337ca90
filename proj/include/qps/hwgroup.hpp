#pragma once

// Discrete Heisenberg-Weyl groups Gamma(a,b,c): validity and irrep counting,
// the Weyl-matrix pair, and the existence test for a unitary-canonical
// partner O of a given unitary G (G O = Omega O G, |Omega| = 1).

#include <optional>
#include <vector>

#include "qps/linalg.hpp"

namespace qps::hw {

using linalg::CMat;
using linalg::cd;

struct GammaSpec {
    long long a, b, c;
    long long d = 0;        // gcd(a,b,c); equals c when valid
    long long a_prime = 0;  // a/d
    long long b_prime = 0;  // b/d
    bool valid = false;     // c | a and c | b
    long long irrep_count = 0;  // a' * b' when valid
};

GammaSpec gamma_analyze(long long a, long long b, long long c);

struct WeylPair {
    CMat g;     // diag(1, Omega, ..., Omega^{d-1})
    CMat o;     // cyclic raising permutation e_k -> e_{k+1}
    cd omega;   // e^{2 pi i / d}
};
WeylPair weyl_pair(int d);

struct Partner {
    CMat o;
    cd omega;
    int period = 0;  // number of distinct eigenvalues cycled
};

// Eigenvalue ladder test: if spec(g) = {lambda Omega^k}_{k=0..p-1} with equal
// multiplicities and p >= 2, returns the eigenspace-cycling unitary partner;
// otherwise nullopt. `multiplicities` receives the diagnostic table either way.
std::optional<Partner> partner_exists(const CMat& g, double tol,
                                      std::vector<int>* multiplicities = nullptr);

}  // namespace qps::hw
