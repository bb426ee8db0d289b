#ifndef QPOT_DGALG_HPP
#define QPOT_DGALG_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qpot/error.hpp"
#include "qpot/koszul.hpp"
#include "qpot/linalg.hpp"
#include "qpot/matrix.hpp"
#include "qpot/poly.hpp"

namespace qpot {

/// Matrix of fresh polynomial variables first, first+1, ... filled row-major.
inline PolyMatrix variable_matrix(std::size_t n, std::size_t first) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Poly::variable(first + i * n + j);
    return m;
}

/**
 * The semi-free matrix dg-algebra on n x n generator matrices X, Y, Z
 * (degree 0), X*, Y*, Z* (degree -1) and W (degree -2). Generator entries are
 * polynomial variables: block b in 0..6 (X, Y, Z, X*, Y*, Z*, W) occupies
 * indices b*n^2 .. b*n^2 + n^2 - 1, row-major.
 *
 *   dX* = [Y,Z], dY* = [Z,X], dZ* = [X,Y], dW = [X,X*] + [Y,Y*] + [Z,Z*].
 */
struct MatrixDGA {
    std::size_t n = 0;
    PolyMatrix X, Y, Z, Xs, Ys, Zs, W;
    PolyMatrix dXs, dYs, dZs, dW;
    std::vector<Poly> delta; ///< image of each generator variable

    std::size_t generator_count() const { return 7 * n * n; }
    int degree_of(std::size_t var) const {
        const std::size_t block = var / (n * n);
        return block < 3 ? 0 : block < 6 ? -1 : -2;
    }

    /**
     * Extends delta as a derivation to polynomials that are at most linear in
     * the negative-degree generators. Degree-0 generators are closed, so a
     * monomial e*g maps to e*delta(g).
     */
    Poly apply(const Poly& p) const {
        Poly out;
        for (const auto& [mono, coeff] : p.terms()) {
            std::size_t odd = mono.size();
            for (std::size_t k = 3 * n * n; k < mono.size(); ++k) {
                if (mono[k] == 0) continue;
                if (mono[k] > 1 || odd != mono.size())
                    throw InputError("derivation only implemented on polynomials linear in negative-degree generators");
                odd = k;
            }
            if (odd == mono.size()) continue;
            Exponents rest = mono;
            rest[odd] = 0;
            out += Poly::monomial(std::move(rest), coeff) * delta.at(odd);
        }
        return out;
    }

    PolyMatrix apply(const PolyMatrix& m) const {
        PolyMatrix out(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = apply(m(i, j));
        return out;
    }
};

inline MatrixDGA build_q3n(std::size_t n) {
    if (n < 1) throw InputError("build_q3n needs n >= 1");
    MatrixDGA q;
    q.n = n;
    const std::size_t nn = n * n;
    q.X = variable_matrix(n, 0);
    q.Y = variable_matrix(n, nn);
    q.Z = variable_matrix(n, 2 * nn);
    q.Xs = variable_matrix(n, 3 * nn);
    q.Ys = variable_matrix(n, 4 * nn);
    q.Zs = variable_matrix(n, 5 * nn);
    q.W = variable_matrix(n, 6 * nn);
    q.dXs = commutator(q.Y, q.Z);
    q.dYs = commutator(q.Z, q.X);
    q.dZs = commutator(q.X, q.Y);
    q.dW = commutator(q.X, q.Xs) + commutator(q.Y, q.Ys) + commutator(q.Z, q.Zs);

    q.delta.assign(7 * nn, Poly());
    for (std::size_t k = 0; k < nn; ++k) {
        q.delta[3 * nn + k] = q.dXs.flat()[k];
        q.delta[4 * nn + k] = q.dYs.flat()[k];
        q.delta[5 * nn + k] = q.dZs.flat()[k];
        q.delta[6 * nn + k] = q.dW.flat()[k];
    }
    return q;
}

/// delta(delta g) = 0 for every generator; for W this is the Jacobi identity.
inline bool verify_delta_squared(std::size_t n) {
    if (n < 1 || n > 4) throw InputError("verify_delta_squared supports 1 <= n <= 4");
    const MatrixDGA q = build_q3n(n);
    for (const auto& d : q.delta)
        if (!q.apply(d).is_zero()) return false;
    return true;
}

namespace dgalg_detail {

/// Nonzero polynomials rescaled to leading coefficient 1, duplicates removed.
inline std::vector<Poly> normalized_set(const std::vector<Poly>& gens) {
    std::vector<Poly> out;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Poly h = g * Poly(Scalar(1) / g.leading_coefficient());
        bool seen = false;
        for (const auto& o : out) seen = seen || o == h;
        if (!seen) out.push_back(std::move(h));
    }
    return out;
}

inline bool contains_all(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    for (const auto& x : b) {
        bool found = false;
        for (const auto& y : a) found = found || x == y;
        if (!found) return false;
    }
    return true;
}

/// Rank of the coefficient matrix of a list of polynomials.
inline std::size_t span_rank(const std::vector<Poly>& polys) {
    std::map<Exponents, std::size_t, DegRevLex> index;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms()) index.try_emplace(e, 0);
    std::size_t k = 0;
    for (auto& [e, pos] : index) pos = k++;
    std::vector<Vec> cols;
    for (const auto& p : polys) {
        Vec v(index.size());
        for (const auto& [e, c] : p.terms()) v[index.at(e)] = c;
        cols.push_back(std::move(v));
    }
    if (index.empty()) return 0;
    return rank(from_columns(index.size(), cols));
}

} // namespace dgalg_detail

/// Same generators up to nonzero scalars (in particular, the same ideal).
inline bool same_generators_up_to_scalar(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    const auto na = dgalg_detail::normalized_set(a), nb = dgalg_detail::normalized_set(b);
    return dgalg_detail::contains_all(na, nb) && dgalg_detail::contains_all(nb, na);
}

/// Equal C-linear spans (in particular, the same ideal).
inline bool same_linear_span(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    std::vector<Poly> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t r = dgalg_detail::span_rank(both);
    return dgalg_detail::span_rank(a) == r && dgalg_detail::span_rank(b) == r;
}

/// All partial derivatives of Tr X[Y,Z] in the entries of X, Y, Z.
inline std::vector<Poly> potential_partials(const PolyMatrix& X, const PolyMatrix& Y, const PolyMatrix& Z,
                                            const std::vector<std::size_t>& variables) {
    const Poly f = trace(X * commutator(Y, Z));
    std::vector<Poly> out;
    for (auto v : variables) out.push_back(f.derivative(v));
    return out;
}

/// Entries of dX*, dY*, dZ* against the gradient of Tr X[Y,Z], up to scalars.
inline bool h0_ideal_match(std::size_t n) {
    if (n < 1 || n > 4) throw InputError("h0_ideal_match supports 1 <= n <= 4");
    const MatrixDGA q = build_q3n(n);
    std::vector<Poly> images;
    for (const auto* m : {&q.dXs, &q.dYs, &q.dZs})
        for (const auto& p : m->flat()) images.push_back(p);
    std::vector<std::size_t> vars;
    for (std::size_t k = 0; k < 3 * n * n; ++k) vars.push_back(k);
    return same_generators_up_to_scalar(images, potential_partials(q.X, q.Y, q.Z, vars));
}

/**
 * Degree-two part of the Chevalley-Eilenberg differential for the Ext quiver
 * of a polystable sheaf with multiplicities a.
 *
 * At vertex i the loop matrices are M_x, M_y, M_z (a_i x a_i) standing for
 * e_{i,1}, e_{i,2}, e_{i,3}. The wedge square of the degree-one generators
 * maps to (1/2)[v, v] = sum over u < w of m2(u, w) (x) [M_u, M_w]; the Ext^2
 * component with coordinate t contributes the entries of one commutator
 * matrix. The images are the entries of those matrices.
 */
struct CEPiece {
    std::vector<std::size_t> mults;
    std::size_t wedge_dim = 0;            ///< dim of the wedge square of the degree-one generators
    std::vector<Poly> images;             ///< entries of the epsilon images
    std::vector<Poly> gradient;           ///< partials of sum Tr A_i[B_i, C_i]
    bool match = false;
};

inline CEPiece ce_piece(const std::vector<std::size_t>& a) {
    std::size_t total = 0;
    for (auto ai : a) {
        if (ai == 0) throw InputError("multiplicities must be positive");
        total += ai;
    }
    if (a.empty() || total > 4) throw InputError("ce_ideal_match supports 1 <= sum a_i <= 4");

    CEPiece piece;
    piece.mults = a;
    std::size_t gens = 0, next = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::size_t m = a[i], mm = m * m;
        gens += 3 * mm;
        const Point3 p{Scalar(static_cast<long>(i)), Scalar(0), Scalar(0)};
        const ExtAlgebra alg = build_ext_algebra(koszul(p));
        std::array<PolyMatrix, 3> M{variable_matrix(m, next), variable_matrix(m, next + mm),
                                    variable_matrix(m, next + 2 * mm)};
        std::array<PolyMatrix, 3> image{PolyMatrix(m, m), PolyMatrix(m, m), PolyMatrix(m, m)};
        for (std::size_t u = 0; u < 3; ++u)
            for (std::size_t w = u + 1; w < 3; ++w) {
                const ExtClass prod = m2(ExtClass::basis(1, u), ExtClass::basis(1, w), alg);
                const PolyMatrix br = commutator(M[u], M[w]);
                for (std::size_t t = 0; t < 3; ++t)
                    if (!prod.coords[t].is_zero()) image[t] += br * Poly(prod.coords[t]);
            }
        for (const auto& im : image)
            for (const auto& e : im.flat()) piece.images.push_back(e);

        std::vector<std::size_t> vars;
        for (std::size_t k = 0; k < 3 * mm; ++k) vars.push_back(next + k);
        const auto partials = potential_partials(M[0], M[1], M[2], vars);
        piece.gradient.insert(piece.gradient.end(), partials.begin(), partials.end());
        next += 3 * mm;
    }
    piece.wedge_dim = gens * (gens - 1) / 2;
    piece.match = same_linear_span(piece.images, piece.gradient);
    return piece;
}

inline bool ce_ideal_match(const std::vector<std::size_t>& a) { return ce_piece(a).match; }

} // namespace qpot

#endif // QPOT_DGALG_HPP
