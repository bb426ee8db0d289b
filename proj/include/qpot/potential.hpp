#ifndef QPOT_POTENTIAL_HPP
#define QPOT_POTENTIAL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qpot/error.hpp"
#include "qpot/linalg.hpp"
#include "qpot/matrix.hpp"
#include "qpot/random.hpp"

namespace qpot {

/**
 * A point (A, B, C, V) of the framed representation space: three n x n
 * matrices and an n x r framing block. r = 0 is an unframed triple.
 *
 * Flattened coordinates are row-major A, then B, then C, then V; this order
 * is used by the Hessian gram and by every slice computation downstream.
 */
struct FramedRep {
    std::size_t n = 0;
    std::size_t r = 0;
    ScalarMatrix A, B, C, V;

    static FramedRep zero(std::size_t n, std::size_t r) {
        return {n, r, ScalarMatrix(n, n), ScalarMatrix(n, n), ScalarMatrix(n, n), ScalarMatrix(n, r)};
    }
    static FramedRep from(ScalarMatrix a, ScalarMatrix b, ScalarMatrix c, ScalarMatrix v) {
        FramedRep rho{a.rows(), v.cols(), std::move(a), std::move(b), std::move(c), std::move(v)};
        rho.validate();
        return rho;
    }

    void validate() const {
        auto sq = [&](const ScalarMatrix& m, const char* name) {
            if (m.rows() != n || m.cols() != n)
                throw InputError(std::string(name) + " must be " + std::to_string(n) + "x" + std::to_string(n) +
                                 ", got " + m.shape());
        };
        sq(A, "A");
        sq(B, "B");
        sq(C, "C");
        if (V.rows() != n || V.cols() != r)
            throw InputError("V must be " + std::to_string(n) + "x" + std::to_string(r) + ", got " + V.shape());
    }

    std::size_t coordinate_count() const { return 3 * n * n + n * r; }
    std::size_t offset_A() const { return 0; }
    std::size_t offset_B() const { return n * n; }
    std::size_t offset_C() const { return 2 * n * n; }
    std::size_t offset_V() const { return 3 * n * n; }

    Vec flatten() const {
        Vec v;
        v.reserve(coordinate_count());
        for (const auto* m : {&A, &B, &C, &V})
            for (const auto& s : m->flat()) v.push_back(s);
        return v;
    }
    static FramedRep unflatten(std::size_t n, std::size_t r, const Vec& v) {
        FramedRep rho = zero(n, r);
        if (v.size() != rho.coordinate_count()) throw InputError("flat vector has wrong length");
        std::size_t k = 0;
        for (auto* m : {&rho.A, &rho.B, &rho.C, &rho.V})
            for (auto& s : m->flat()) s = v[k++];
        return rho;
    }

    friend bool operator==(const FramedRep& a, const FramedRep& b) {
        return a.n == b.n && a.r == b.r && a.A == b.A && a.B == b.B && a.C == b.C && a.V == b.V;
    }
};

struct GradientTriple {
    ScalarMatrix ga, gb, gc;
};

/// Tr A[B, C]; the framing block does not enter.
inline Scalar eval_potential(const FramedRep& rho) {
    rho.validate();
    return trace(rho.A * commutator(rho.B, rho.C));
}

/// Components pair with directions via Tr(X G): G_A = [B,C], G_B = [C,A], G_C = [A,B].
inline GradientTriple gradient(const FramedRep& rho) {
    rho.validate();
    return {commutator(rho.B, rho.C), commutator(rho.C, rho.A), commutator(rho.A, rho.B)};
}

/**
 * Matrix of second partial derivatives of Tr A[B,C] at rho, over all
 * 3n^2 + rn coordinates. The potential is trilinear in (A, B, C), so only the
 * mixed blocks are nonzero and the V rows/columns vanish identically.
 *
 * With this gram, f(rho + t v) = f(rho) + t df(v) + (t^2 / 2) v^T G v + O(t^3).
 */
inline QuadraticForm hessian(const FramedRep& rho) {
    rho.validate();
    const std::size_t n = rho.n;
    const std::size_t N = rho.coordinate_count();
    ScalarMatrix g(N, N);
    auto idx = [n](std::size_t off, std::size_t i, std::size_t j) { return off + i * n + j; };
    const std::size_t oa = rho.offset_A(), ob = rho.offset_B(), oc = rho.offset_C();

    // d^2/dA_ij dB_kl = delta_jk C_li - delta_il C_jk
    // d^2/dB_kl dC_mn = delta_lm A_nk - delta_nk A_lm
    // d^2/dA_ij dC_mn = delta_ni B_jm - delta_jm B_ni
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Scalar ab, bc, ac;
                    if (j == k) ab += rho.C(l, i);
                    if (i == l) ab -= rho.C(j, k);
                    // reuse (i,j) as (k,l) of B and (k,l) as (m,n) of C
                    if (j == k) bc += rho.A(l, i);
                    if (l == i) bc -= rho.A(j, k);
                    if (l == i) ac += rho.B(j, k);
                    if (j == k) ac -= rho.B(l, i);
                    if (!ab.is_zero()) {
                        g(idx(oa, i, j), idx(ob, k, l)) = ab;
                        g(idx(ob, k, l), idx(oa, i, j)) = ab;
                    }
                    if (!bc.is_zero()) {
                        g(idx(ob, i, j), idx(oc, k, l)) = bc;
                        g(idx(oc, k, l), idx(ob, i, j)) = bc;
                    }
                    if (!ac.is_zero()) {
                        g(idx(oa, i, j), idx(oc, k, l)) = ac;
                        g(idx(oc, k, l), idx(oa, i, j)) = ac;
                    }
                }
    return QuadraticForm(std::move(g));
}

/// Block-diagonal A, B, C; framings stacked vertically.
inline FramedRep block_embed(const std::vector<FramedRep>& parts) {
    if (parts.empty()) throw InputError("block_embed needs at least one part");
    const std::size_t r = parts.front().r;
    std::vector<ScalarMatrix> as, bs, cs, vs;
    for (const auto& p : parts) {
        p.validate();
        if (p.r != r) throw InputError("block_embed: parts have different framing ranks");
        as.push_back(p.A);
        bs.push_back(p.B);
        cs.push_back(p.C);
        vs.push_back(p.V);
    }
    FramedRep out;
    out.A = block_diagonal(as);
    out.B = block_diagonal(bs);
    out.C = block_diagonal(cs);
    out.n = out.A.rows();
    out.r = r;
    out.V = vstack(vs);
    return out;
}

/// g . (A, B, C, V) = (g A g^-1, g B g^-1, g C g^-1, g V).
inline FramedRep gauge_act(const ScalarMatrix& g, const FramedRep& rho) {
    rho.validate();
    const ScalarMatrix gi = inverse(g);
    return {rho.n, rho.r, g * rho.A * gi, g * rho.B * gi, g * rho.C * gi, g * rho.V};
}

/// Infinitesimal gauge direction of X: ([X,A], [X,B], [X,C], X V), flattened.
inline Vec gauge_direction(const ScalarMatrix& x, const FramedRep& rho) {
    return FramedRep{rho.n, rho.r, commutator(x, rho.A), commutator(x, rho.B), commutator(x, rho.C), x * rho.V}
        .flatten();
}

/// Matrix whose column (a*n + b) is gauge_direction(E_ab).
inline ScalarMatrix gauge_matrix(const FramedRep& rho) {
    const std::size_t n = rho.n;
    std::vector<Vec> cols;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) cols.push_back(gauge_direction(ScalarMatrix::unit(n, n, a, b), rho));
    return from_columns(rho.coordinate_count(), cols);
}

/// True iff Tr A[B,C] is unchanged when V is replaced by `trials` seeded random framings.
inline bool verify_framing_independence(const FramedRep& rho, std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw InputError("trials must be >= 1");
    const Scalar base = eval_potential(rho);
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        FramedRep other = rho;
        other.V = rng.gaussian_matrix(rho.n, rho.r, 9);
        if (eval_potential(other) != base) return false;
    }
    return true;
}

/// Entries in [-bound, bound] for real and imaginary parts, determined by seed.
inline FramedRep random_rep(std::size_t n, std::size_t r, std::uint64_t seed, long bound) {
    if (bound < 1) throw InputError("random_rep needs bound >= 1");
    Rng rng(seed);
    FramedRep rho = FramedRep::zero(n, r);
    for (auto* m : {&rho.A, &rho.B, &rho.C, &rho.V})
        for (auto& s : m->flat()) s = rng.gaussian_integer(bound);
    return rho;
}

} // namespace qpot

#endif // QPOT_POTENTIAL_HPP
