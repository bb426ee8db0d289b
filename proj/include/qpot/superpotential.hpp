#ifndef QPOT_SUPERPOTENTIAL_HPP
#define QPOT_SUPERPOTENTIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qpot/error.hpp"
#include "qpot/koszul.hpp"
#include "qpot/quiver.hpp"
#include "qpot/random.hpp"

namespace qpot {

/// Cyclic word e_1 ... e_len in the loops of one Ext-quiver vertex.
struct NCWord {
    std::size_t vertex = 0;
    std::vector<std::size_t> loops; ///< 0, 1, 2 for e_{i,1}, e_{i,2}, e_{i,3}

    std::string to_string() const {
        static const char* names[3] = {"A", "B", "C"};
        std::string s;
        for (auto l : loops) s += std::string(names[l]) + std::to_string(vertex + 1);
        return s;
    }
    friend bool operator<(const NCWord& a, const NCWord& b) {
        return a.vertex != b.vertex ? a.vertex < b.vertex : a.loops < b.loops;
    }
    friend bool operator==(const NCWord& a, const NCWord& b) { return a.vertex == b.vertex && a.loops == b.loops; }
};

struct Superpotential {
    std::map<NCWord, Scalar> terms;
    std::vector<Scalar> j; ///< (m2(A^v, B^v), C^v) per vertex
    std::vector<Scalar> l; ///< (m2(A^v, C^v), B^v) per vertex

    Scalar coefficient(const NCWord& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? Scalar() : it->second;
    }
};

namespace superpot_detail {
inline Scalar triple_pairing(const ExtAlgebra& alg, std::size_t a, std::size_t b, std::size_t c) {
    return cyclic_pairing(m2(ExtClass::basis(1, a), ExtClass::basis(1, b), alg), ExtClass::basis(1, c), alg);
}
} // namespace superpot_detail

/**
 * Length-three terms a = (1/3) (m2(e1^v, e2^v), e3^v) at every vertex, one
 * Ext algebra per point. Longer words would come from higher products, which
 * vanish; mixed-vertex words do not exist since distinct points have no Ext.
 */
inline Superpotential extract_superpotential(const PolystableData& data, const std::vector<ExtAlgebra>& algebras) {
    data.validate();
    if (algebras.size() != data.k()) throw InputError("one Ext algebra per vertex required");
    Superpotential w;
    const Scalar third = Scalar::rational(1, 3);
    for (std::size_t v = 0; v < data.k(); ++v) {
        const ExtAlgebra& alg = algebras[v];
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
                for (std::size_t c = 0; c < 3; ++c) {
                    const Scalar coeff = third * superpot_detail::triple_pairing(alg, a, b, c);
                    if (!coeff.is_zero()) w.terms[NCWord{v, {a, b, c}}] = coeff;
                }
        w.j.push_back(superpot_detail::triple_pairing(alg, 0, 1, 2));
        w.l.push_back(superpot_detail::triple_pairing(alg, 0, 2, 1));
    }
    return w;
}

inline std::vector<ExtAlgebra> ext_algebras(const PolystableData& data) {
    std::vector<ExtAlgebra> out;
    for (const auto& p : data.points) out.push_back(build_ext_algebra(koszul(p)));
    return out;
}

inline Superpotential extract_superpotential(const PolystableData& data) {
    return extract_superpotential(data, ext_algebras(data));
}

/// Tr W on matrices mats[v] = {A_v, B_v, C_v}.
inline Scalar trace_of(const Superpotential& w, const std::vector<std::array<ScalarMatrix, 3>>& mats) {
    Scalar s;
    for (const auto& [word, coeff] : w.terms) {
        const auto& m = mats.at(word.vertex);
        ScalarMatrix prod = m[word.loops.at(0)];
        for (std::size_t k = 1; k < word.loops.size(); ++k) prod = prod * m[word.loops[k]];
        s += coeff * trace(prod);
    }
    return s;
}

struct TraceIdentityReport {
    Scalar j;                     ///< pairing scalar at vertex 0
    bool j_consistent = false;    ///< same j at every vertex
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t mismatches = 0;
    std::size_t term_count = 0;
    bool identity_ok() const { return j_consistent && mismatches == 0 && !j.is_zero(); }
};

/// Tr W = j * sum_v Tr A_v[B_v, C_v] on seeded random Gaussian-integer matrices.
inline TraceIdentityReport verify_trace_identity(const PolystableData& data, const Superpotential& w,
                                                 std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw InputError("trials must be >= 1");
    TraceIdentityReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.term_count = w.terms.size();
    rep.j = w.j.at(0);
    rep.j_consistent = true;
    for (const auto& jv : w.j) rep.j_consistent = rep.j_consistent && jv == rep.j;

    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<std::array<ScalarMatrix, 3>> mats;
        Scalar rhs;
        for (std::size_t v = 0; v < data.k(); ++v) {
            const std::size_t a = data.mults[v];
            std::array<ScalarMatrix, 3> m{rng.gaussian_matrix(a, a, 5), rng.gaussian_matrix(a, a, 5),
                                          rng.gaussian_matrix(a, a, 5)};
            rhs += trace(m[0] * commutator(m[1], m[2]));
            mats.push_back(std::move(m));
        }
        if (trace_of(w, mats) != rep.j * rhs) ++rep.mismatches;
    }
    return rep;
}

inline TraceIdentityReport verify_trace_identity(const PolystableData& data, std::size_t trials, std::uint64_t seed) {
    return verify_trace_identity(data, extract_superpotential(data), trials, seed);
}

/// j + l = 0 with j != 0, from the structure constants of one Ext algebra.
inline bool sanity_j_plus_l(const ExtAlgebra& alg) {
    const Scalar j = superpot_detail::triple_pairing(alg, 0, 1, 2);
    const Scalar l = superpot_detail::triple_pairing(alg, 0, 2, 1);
    return !j.is_zero() && (j + l).is_zero();
}

inline bool sanity_j_plus_l(const PolystableData& data) {
    data.validate();
    for (const auto& alg : ext_algebras(data))
        if (!sanity_j_plus_l(alg)) return false;
    return true;
}

} // namespace qpot

#endif // QPOT_SUPERPOTENTIAL_HPP
