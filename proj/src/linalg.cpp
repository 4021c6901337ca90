#include "qps/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qps::linalg {

namespace {
constexpr double kPi = 3.14159265358979323846;

void check_same_dim(const CMat& a, const CMat& b, const char* what) {
    if (a.dim != b.dim)
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}
}  // namespace

CMat CMat::identity(int d) {
    CMat m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = cd{1.0, 0.0};
    return m;
}

CMat CMat::diag(const std::vector<cd>& entries) {
    CMat m(static_cast<int>(entries.size()));
    for (int i = 0; i < m.dim; ++i) m.at(i, i) = entries[i];
    return m;
}

bool CMat::finite() const {
    for (const cd& z : a)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

CMat mat_mul(const CMat& a, const CMat& b) {
    check_same_dim(a, b, "mat_mul");
    CMat c(a.dim);
    kernels::active_matmul()(a.a.data(), b.a.data(), c.a.data(),
                             static_cast<std::size_t>(a.dim));
    return c;
}

CMat adjoint(const CMat& a) {
    CMat c(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) c.at(j, i) = std::conj(a.at(i, j));
    return c;
}

cd trace(const CMat& a) {
    cd t{0.0, 0.0};
    for (int i = 0; i < a.dim; ++i) t += a.at(i, i);
    return t;
}

CMat add(const CMat& a, const CMat& b) {
    check_same_dim(a, b, "add");
    CMat c = a;
    kernels::active_axpy()(c.a.data(), cd{1.0, 0.0}, b.a.data(), b.a.size());
    return c;
}

CMat sub(const CMat& a, const CMat& b) {
    check_same_dim(a, b, "sub");
    CMat c = a;
    kernels::active_axpy()(c.a.data(), cd{-1.0, 0.0}, b.a.data(), b.a.size());
    return c;
}

CMat scale(const CMat& a, cd alpha) {
    CMat c(a.dim);
    kernels::active_axpy()(c.a.data(), alpha, a.a.data(), a.a.size());
    return c;
}

void accumulate(CMat& y, cd alpha, const CMat& x) {
    check_same_dim(y, x, "accumulate");
    kernels::active_axpy()(y.a.data(), alpha, x.a.data(), x.a.size());
}

double fro_norm(const CMat& a) {
    double s = 0.0;
    for (const cd& z : a.a) s += std::norm(z);
    return std::sqrt(s);
}

double fro_dist(const CMat& a, const CMat& b) {
    check_same_dim(a, b, "fro_dist");
    double s = 0.0;
    for (std::size_t i = 0; i < a.a.size(); ++i) s += std::norm(a.a[i] - b.a[i]);
    return std::sqrt(s);
}

double unitarity_error(const CMat& a) {
    return fro_dist(mat_mul(adjoint(a), a), CMat::identity(a.dim));
}

std::vector<cd> mat_vec(const CMat& a, const std::vector<cd>& v) {
    if (static_cast<int>(v.size()) != a.dim)
        throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<cd> out(v.size(), cd{0.0, 0.0});
    for (int i = 0; i < a.dim; ++i) {
        cd s{0.0, 0.0};
        for (int j = 0; j < a.dim; ++j) s += a.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

CMat unitary_pow(const CMat& a, long long k) {
    CMat base = k >= 0 ? a : adjoint(a);
    long long e = k >= 0 ? k : -k;
    CMat r = CMat::identity(a.dim);
    while (e > 0) {
        if (e & 1) r = mat_mul(r, base);
        base = mat_mul(base, base);
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Hermitian Jacobi
// ---------------------------------------------------------------------------

namespace {

double offdiag_norm(const CMat& h) {
    double s = 0.0;
    for (int i = 0; i < h.dim; ++i)
        for (int j = 0; j < h.dim; ++j)
            if (i != j) s += std::norm(h.at(i, j));
    return std::sqrt(s);
}

}  // namespace

void eig_hermitian(const CMat& h, std::vector<double>& evals, CMat& evecs) {
    const int n = h.dim;
    CMat A = h;
    CMat V = CMat::identity(n);
    const double scale = std::max(fro_norm(h), 1e-300);
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (offdiag_norm(A) <= 1e-15 * scale) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cd g = A.at(p, q);
                const double ag = std::abs(g);
                if (ag <= 1e-18 * scale) continue;
                const double app = A.at(p, p).real();
                const double aqq = A.at(q, q).real();
                const double tau = (app - aqq) / (2.0 * ag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cd u = g / ag;  // e^{i arg g}
                // columns: col_p' = c*col_p + s*conj(u)*col_q ; col_q' = -s*u*col_p + c*col_q
                for (int i = 0; i < n; ++i) {
                    const cd aip = A.at(i, p), aiq = A.at(i, q);
                    A.at(i, p) = c * aip + s * std::conj(u) * aiq;
                    A.at(i, q) = -s * u * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    const cd apj = A.at(p, j), aqj = A.at(q, j);
                    A.at(p, j) = c * apj + s * u * aqj;
                    A.at(q, j) = -s * std::conj(u) * apj + c * aqj;
                }
                for (int i = 0; i < n; ++i) {
                    const cd vip = V.at(i, p), viq = V.at(i, q);
                    V.at(i, p) = c * vip + s * std::conj(u) * viq;
                    V.at(i, q) = -s * u * vip + c * viq;
                }
            }
        }
    }
    // sort ascending, permuting columns with eigenvalues
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = A.at(i, i).real();
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });
    evals.resize(n);
    evecs = CMat(n);
    for (int k = 0; k < n; ++k) {
        evals[k] = d[idx[k]];
        for (int i = 0; i < n; ++i) evecs.at(i, k) = V.at(i, idx[k]);
    }
}

// ---------------------------------------------------------------------------
// Unitary eigendecomposition via commuting Hermitian parts
// ---------------------------------------------------------------------------

namespace {

// Fix free eigenvector phase: first component of magnitude > 1e-8 made real
// positive. Keeps decompositions reproducible across kernels.
void canonicalize_phase(CMat& vecs) {
    for (int k = 0; k < vecs.dim; ++k) {
        for (int i = 0; i < vecs.dim; ++i) {
            const cd z = vecs.at(i, k);
            if (std::abs(z) > 1e-8) {
                const cd ph = std::conj(z) / std::abs(z);
                for (int j = 0; j < vecs.dim; ++j) vecs.at(j, k) *= ph;
                break;
            }
        }
    }
}

}  // namespace

EigDecomp eig_unitary_full(const CMat& a, double tol, double cluster_tol) {
    if (!a.finite()) throw std::invalid_argument("eig_unitary: non-finite input");
    if (unitarity_error(a) > tol)
        throw std::invalid_argument("eig_unitary: input not unitary within tol");
    const int n = a.dim;
    const CMat ad = adjoint(a);
    CMat h1(n), h2(n);  // (A+A^dag)/2 and (A-A^dag)/(2i); commute for normal A
    for (std::size_t i = 0; i < a.a.size(); ++i) {
        h1.a[i] = 0.5 * (a.a[i] + ad.a[i]);
        h2.a[i] = cd{0.0, -0.5} * (a.a[i] - ad.a[i]);
    }
    std::vector<double> ev1;
    CMat v1(n);
    eig_hermitian(h1, ev1, v1);

    EigDecomp out;
    out.vectors = CMat(n);
    out.eigenvalues.resize(n);
    int col = 0;
    int start = 0;
    while (start < n) {
        int stop = start + 1;
        while (stop < n && std::abs(ev1[stop] - ev1[stop - 1]) <= cluster_tol) ++stop;
        const int m = stop - start;
        // project h2 onto the cluster and diagonalize the block
        CMat block(m);
        std::vector<std::vector<cd>> h2v(m);
        for (int kk = 0; kk < m; ++kk) {
            std::vector<cd> v(n);
            for (int i = 0; i < n; ++i) v[i] = v1.at(i, start + kk);
            h2v[kk] = mat_vec(h2, v);
        }
        for (int r = 0; r < m; ++r)
            for (int cidx = 0; cidx < m; ++cidx) {
                cd s{0.0, 0.0};
                for (int i = 0; i < n; ++i)
                    s += std::conj(v1.at(i, start + r)) * h2v[cidx][i];
                block.at(r, cidx) = s;
            }
        std::vector<double> ev2;
        CMat w(m);
        eig_hermitian(block, ev2, w);
        for (int kk = 0; kk < m; ++kk) {
            for (int i = 0; i < n; ++i) {
                cd s{0.0, 0.0};
                for (int r = 0; r < m; ++r) s += v1.at(i, start + r) * w.at(r, kk);
                out.vectors.at(i, col) = s;
            }
            ++col;
        }
        start = stop;
    }
    canonicalize_phase(out.vectors);
    // Rayleigh quotients against the original matrix, projected to the circle
    for (int k = 0; k < n; ++k) {
        std::vector<cd> v(n);
        for (int i = 0; i < n; ++i) v[i] = out.vectors.at(i, k);
        std::vector<cd> av = mat_vec(a, v);
        cd lam{0.0, 0.0};
        for (int i = 0; i < n; ++i) lam += std::conj(v[i]) * av[i];
        out.eigenvalues[k] = lam / std::abs(lam);
    }
    return out;
}

std::vector<EigPair> eig_unitary(const CMat& a, double tol, double cluster_tol) {
    EigDecomp full = eig_unitary_full(a, tol, cluster_tol);
    const int n = a.dim;
    // bucket by phase in [0, 2pi), tolerance-clustered
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto phase = [&](int k) {
        double p = std::arg(full.eigenvalues[k]);
        if (p < -1e-12) p += 2.0 * kPi;
        if (p < 0) p = 0;
        return p;
    };
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return phase(i) < phase(j); });
    std::vector<EigPair> pairs;
    int start = 0;
    while (start < n) {
        int stop = start + 1;
        while (stop < n &&
               std::abs(phase(order[stop]) - phase(order[stop - 1])) <= cluster_tol)
            ++stop;
        // wrap-around: a cluster straddling 2pi merges with the first one
        EigPair pr;
        pr.multiplicity = stop - start;
        cd mean{0.0, 0.0};
        for (int k = start; k < stop; ++k) mean += full.eigenvalues[order[k]];
        pr.eigenvalue = mean / std::abs(mean);
        pr.basis.resize(static_cast<std::size_t>(n) * pr.multiplicity);
        for (int k = start; k < stop; ++k)
            for (int i = 0; i < n; ++i)
                pr.basis[static_cast<std::size_t>(k - start) * n + i] =
                    full.vectors.at(i, order[k]);
        pairs.push_back(std::move(pr));
        start = stop;
    }
    if (pairs.size() >= 2) {
        double lo = std::arg(pairs.front().eigenvalue);
        if (lo < 0) lo += 2.0 * kPi;
        double hi = std::arg(pairs.back().eigenvalue);
        if (hi < 0) hi += 2.0 * kPi;
        if (2.0 * kPi - hi + lo <= cluster_tol) {
            // merge last into first
            EigPair& f = pairs.front();
            EigPair& l = pairs.back();
            const int n_ = a.dim;
            f.basis.insert(f.basis.end(), l.basis.begin(), l.basis.end());
            cd mean = f.eigenvalue * double(f.multiplicity) +
                      l.eigenvalue * double(l.multiplicity);
            f.multiplicity += l.multiplicity;
            f.eigenvalue = mean / std::abs(mean);
            (void)n_;
            pairs.pop_back();
        }
    }
    return pairs;
}

CMat expm_small(const CMat& a) {
    if (a.dim > 64) throw std::invalid_argument("expm_small: dim > 64");
    // scale so ||T||_F <= 0.25, Taylor to convergence, square back
    double nrm = fro_norm(a);
    int s = 0;
    while (nrm > 0.25 && s < 60) {
        nrm *= 0.5;
        ++s;
    }
    CMat t = scale(a, cd{std::ldexp(1.0, -s), 0.0});
    CMat result = CMat::identity(a.dim);
    CMat term = CMat::identity(a.dim);
    for (int k = 1; k <= 30; ++k) {
        term = mat_mul(term, t);
        term = scale(term, cd{1.0 / k, 0.0});
        accumulate(result, cd{1.0, 0.0}, term);
        if (fro_norm(term) < 1e-18 * std::max(1.0, fro_norm(result))) break;
    }
    for (int k = 0; k < s; ++k) result = mat_mul(result, result);
    return result;
}

}  // namespace qps::linalg
