#ifndef QPOT_STABILITY_HPP
#define QPOT_STABILITY_HPP

#include <cstddef>
#include <deque>
#include <vector>

#include "qpot/error.hpp"
#include "qpot/linalg.hpp"
#include "qpot/potential.hpp"

namespace qpot {

/**
 * Smallest subspace of C^n containing every framing column and stable under
 * A, B and C. Vectors are accepted in discovery order (framing columns first,
 * then images breadth-first), so the basis is deterministic.
 */
inline SubspaceBasis krylov_closure(const FramedRep& rho) {
    rho.validate();
    if (rho.r == 0) throw InputError("krylov_closure needs at least one framing vector");
    const std::size_t n = rho.n;
    std::vector<Vec> basis;
    std::deque<Vec> pending;
    for (std::size_t j = 0; j < rho.r; ++j) pending.push_back(rho.V.col(j));

    while (!pending.empty() && basis.size() < n) {
        Vec w = std::move(pending.front());
        pending.pop_front();
        if (is_zero(w)) continue;
        std::vector<Vec> trial = basis;
        trial.push_back(w);
        if (!linearly_independent(n, trial)) continue;
        basis = std::move(trial);
        for (const auto* m : {&rho.A, &rho.B, &rho.C}) pending.push_back(*m * w);
    }
    return SubspaceBasis(n, std::move(basis));
}

/// Framed theta-stability: the framing vectors generate C^n under A, B, C.
inline bool is_stable(const FramedRep& rho) { return krylov_closure(rho).dim() == rho.n; }

/// A, B, C pairwise commute (exactly).
inline bool is_critical(const FramedRep& rho) {
    const GradientTriple g = gradient(rho);
    return g.ga.is_zero() && g.gb.is_zero() && g.gc.is_zero();
}

/// Sum of |entry|^2 over the three gradient components; real and nonnegative.
inline Scalar gradient_norm(const FramedRep& rho) {
    const GradientTriple g = gradient(rho);
    Scalar s;
    for (const auto* m : {&g.ga, &g.gb, &g.gc})
        for (const auto& v : m->flat()) s += v.norm();
    return s;
}

struct QuotPointReport {
    bool critical = false;
    bool stable = false;
    Scalar gradient_norm;
    std::size_t krylov_dim = 0;
    std::size_t n = 0;

    /// The point lies on crit(f) inside the stable locus, i.e. represents a Quot-scheme point.
    bool is_quot_point() const { return critical && stable; }
};

inline QuotPointReport quot_point_check(const FramedRep& rho) {
    rho.validate();
    QuotPointReport rep;
    rep.n = rho.n;
    rep.critical = is_critical(rho);
    rep.gradient_norm = gradient_norm(rho);
    rep.krylov_dim = rho.r == 0 ? 0 : krylov_closure(rho).dim();
    rep.stable = rho.r > 0 && rep.krylov_dim == rho.n;
    return rep;
}

} // namespace qpot

#endif // QPOT_STABILITY_HPP
