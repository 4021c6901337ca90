#pragma once

// Exact arithmetic over Z_D and the group SL(2,Z_D). All residue arithmetic
// is integral; complex values appear only when evaluating Gauss sums.

#include <complex>
#include <cstdint>
#include <vector>

namespace qps::modring {

using cd = std::complex<double>;

int64_t mod_reduce(int64_t a, int64_t d);
// b with a*b = 1 (mod d); throws naming gcd(a,d) when not invertible.
int64_t mod_inverse(int64_t a, int64_t d);
bool is_prime(int64_t n);
// smallest primitive root of an odd prime d
int64_t primitive_root(int64_t d);
// multiplicative order of a mod d (gcd(a,d)=1)
int64_t mult_order(int64_t a, int64_t d);

// sigma(m) = (1/sqrt d) sum_n exp(i (2pi/d) m n^2), by direct summation.
cd gauss_sum(int64_t m, int64_t d);

// An element of SL(2,Z_D) stored as residues (s1,t1,s2,t2); it acts on label
// pairs by m' = (s1 m1 + t1 m2, s2 m1 + t2 m2), i.e. as the column matrix
// [[s1,t1],[s2,t2]]. det = s1 t2 - t1 s2 = 1 (mod d).
struct SL2Elem {
    int64_t d;
    int64_t s1, t1, s2, t2;

    SL2Elem(int64_t d_, int64_t s1_, int64_t t1_, int64_t s2_, int64_t t2_);

    std::pair<int64_t, int64_t> act(int64_t m1, int64_t m2) const;
    // inverse action, the adjugate [[t2,-t1],[-s2,s1]]
    std::pair<int64_t, int64_t> act_inv(int64_t m1, int64_t m2) const;
    bool is_identity() const;
    bool operator==(const SL2Elem& o) const {
        return d == o.d && s1 == o.s1 && t1 == o.t1 && s2 == o.s2 && t2 == o.t2;
    }
};

SL2Elem sl2_identity(int64_t d);
// Composition in action order: (a then b), so that act_{mul(a,b)} = act_b o act_a.
// With this order the metaplectic lift is projectively homomorphic.
SL2Elem sl2_mul(const SL2Elem& a, const SL2Elem& b);
SL2Elem sl2_inv(const SL2Elem& a);
// least k >= 1 with a^k = I, capped at |SL(2,Z_D)|; throws past the cap
int64_t sl2_order(const SL2Elem& a);
// |SL(2,Z_D)| for prime d: d(d^2-1)
int64_t sl2_group_order(int64_t d);

// all (a,b) with a^2 + b^2 = 1 (mod d) as elements [[a,-b],[b,a]]
std::vector<SL2Elem> rotation_family(int64_t d);

}  // namespace qps::modring
