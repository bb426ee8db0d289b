#ifndef QPOT_LUNA_HPP
#define QPOT_LUNA_HPP

#include <cstddef>
#include <vector>

#include "qpot/error.hpp"
#include "qpot/linalg.hpp"
#include "qpot/potential.hpp"
#include "qpot/quiver.hpp"
#include "qpot/stability.hpp"

namespace qpot {

/// The polystable point y = (alpha, beta, gamma) with scalar diagonal blocks alpha_i Id_{a_i}, ...
struct SlicePoint {
    PolystableData data;
    FramedRep y;
    std::vector<std::size_t> block_start; ///< first row of each diagonal block
    std::vector<std::size_t> block_of;    ///< block index of each row

    std::size_t n() const { return y.n; }
};

inline SlicePoint make_slice_point(const PolystableData& data) {
    data.validate();
    SlicePoint p;
    p.data = data;
    const std::size_t n = data.n();
    p.y = FramedRep::zero(n, 0);
    std::size_t row = 0;
    for (std::size_t i = 0; i < data.k(); ++i) {
        p.block_start.push_back(row);
        for (std::size_t s = 0; s < data.mults[i]; ++s, ++row) {
            p.block_of.push_back(i);
            p.y.A(row, row) = data.points[i][0];
            p.y.B(row, row) = data.points[i][1];
            p.y.C(row, row) = data.points[i][2];
        }
    }
    if (!is_critical(p.y)) throw InvariantError("polystable point is not critical");
    return p;
}

/// 3n^2 x n^2 matrix of X -> ([X, alpha], [X, beta], [X, gamma]); column index a*n + b is X = E_ab.
inline ScalarMatrix sigma_matrix(const SlicePoint& p) {
    const std::size_t n = p.n();
    std::vector<Vec> cols;
    cols.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const ScalarMatrix x = ScalarMatrix::unit(n, n, a, b);
            FramedRep img{n, 0, commutator(x, p.y.A), commutator(x, p.y.B), commutator(x, p.y.C), ScalarMatrix(n, 0)};
            cols.push_back(img.flatten());
        }
    return from_columns(3 * n * n, cols);
}

namespace detail {

/// One row per off-diagonal-block entry (s, t): conj(da) X_st + conj(db) Y_st + conj(dc) Z_st.
inline std::vector<Vec> complement_conditions(const SlicePoint& p) {
    const std::size_t n = p.n();
    std::vector<Vec> rows;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t i = p.block_of[s], j = p.block_of[t];
            if (i == j) continue;
            Vec row(3 * n * n);
            for (std::size_t c = 0; c < 3; ++c)
                row[c * n * n + s * n + t] = (p.data.points[i][c] - p.data.points[j][c]).conj();
            rows.push_back(std::move(row));
        }
    return rows;
}

inline std::vector<std::size_t> diagonal_block_coordinates(const SlicePoint& p) {
    const std::size_t n = p.n();
    std::vector<std::size_t> coords;
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t)
                if (p.block_of[s] == p.block_of[t]) coords.push_back(c * n * n + s * n + t);
    return coords;
}

inline std::vector<Vec> unit_vectors(std::size_t dim, const std::vector<std::size_t>& coords) {
    std::vector<Vec> out;
    for (auto k : coords) {
        Vec v(dim);
        v[k] = Scalar(1);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

/// Solutions of conj(a_i - a_j) X_ij + conj(b_i - b_j) Y_ij + conj(c_i - c_j) Z_ij = 0 for all i != j.
inline SubspaceBasis im_sigma_perp(const SlicePoint& p) {
    const std::size_t dim = 3 * p.n() * p.n();
    return SubspaceBasis(dim, kernel_basis(from_rows(dim, detail::complement_conditions(p))));
}

struct Decomposition {
    std::vector<Vec> basis_Ya;       ///< block-diagonal triples
    std::vector<Vec> basis_imSigma;  ///< tangent to the orbit
    std::vector<Vec> basis_Yslice;   ///< zero-diagonal-block part of the complement

    std::size_t total() const { return basis_Ya.size() + basis_imSigma.size() + basis_Yslice.size(); }
};

/**
 * Y_n = Y_a (+) im(sigma) (+) Y_n^sigma at the polystable point, with each
 * summand given by an exact basis. Throws InputError when sigma has the wrong
 * rank (points not distinct) and InvariantError if the sum is not direct.
 */
inline Decomposition slice_decomposition(const SlicePoint& p) {
    const std::size_t n = p.n();
    const std::size_t dim = 3 * n * n;
    Decomposition d;

    const auto diag = detail::diagonal_block_coordinates(p);
    d.basis_Ya = detail::unit_vectors(dim, diag);

    const ScalarMatrix sig = sigma_matrix(p);
    const Echelon e = echelon(sig);
    std::size_t expected = n * n;
    for (auto a : p.data.mults) expected -= a * a;
    if (e.rank() != expected)
        throw InputError("sigma has rank " + std::to_string(e.rank()) + ", expected " + std::to_string(expected) +
                         "; points are not pairwise distinct");
    for (auto c : e.pivot_cols) d.basis_imSigma.push_back(sig.col(c));

    auto rows = detail::complement_conditions(p);
    for (const auto& v : d.basis_Ya) rows.push_back(v);
    d.basis_Yslice = kernel_basis(from_rows(dim, rows));

    std::vector<Vec> all = d.basis_Ya;
    all.insert(all.end(), d.basis_imSigma.begin(), d.basis_imSigma.end());
    all.insert(all.end(), d.basis_Yslice.begin(), d.basis_Yslice.end());
    if (all.size() != dim || !linearly_independent(dim, all))
        throw InvariantError("tangent decomposition is not a direct sum");
    return d;
}

/// Hessian of the potential at y restricted to Y_n^sigma (in the slice basis).
inline QuadraticForm slice_hessian(const SlicePoint& p, const Decomposition& d) {
    if (d.basis_Yslice.empty()) return QuadraticForm(ScalarMatrix(0, 0));
    return form_restrict(hessian(p.y), d.basis_Yslice);
}

inline bool slice_hessian_nondegenerate(const SlicePoint& p) {
    const QuadraticForm h = slice_hessian(p, slice_decomposition(p));
    return h.dim() == 0 || !determinant(h.gram()).is_zero();
}

/// Everything the slice analysis checks at one polystable point.
struct LunaReport {
    std::size_t dim_Ya = 0, dim_imSigma = 0, dim_Yslice = 0;
    bool direct_sum = false;
    bool im_sigma_off_diagonal = false;
    std::size_t sigma_kernel_dim = 0;
    std::size_t expected_sigma_kernel_dim = 0; ///< sum a_i^2
    bool sigma_in_hessian_radical = false;
    bool complement_contains_Ya = false;
    Scalar slice_determinant;
    bool nondegenerate = false;

    bool ok() const {
        return direct_sum && im_sigma_off_diagonal && sigma_kernel_dim == expected_sigma_kernel_dim &&
               sigma_in_hessian_radical && complement_contains_Ya && nondegenerate;
    }
};

inline LunaReport luna_report(const PolystableData& data) {
    const SlicePoint p = make_slice_point(data);
    const std::size_t n = p.n();
    LunaReport rep;
    const Decomposition d = slice_decomposition(p);
    rep.dim_Ya = d.basis_Ya.size();
    rep.dim_imSigma = d.basis_imSigma.size();
    rep.dim_Yslice = d.basis_Yslice.size();
    rep.direct_sum = d.total() == 3 * n * n; // slice_decomposition already verified independence

    const ScalarMatrix sig = sigma_matrix(p);
    rep.im_sigma_off_diagonal = true;
    for (auto k : detail::diagonal_block_coordinates(p))
        for (std::size_t c = 0; c < sig.cols(); ++c)
            if (!sig(k, c).is_zero()) rep.im_sigma_off_diagonal = false;

    rep.sigma_kernel_dim = kernel_basis(sig).size();
    for (auto a : data.mults) rep.expected_sigma_kernel_dim += a * a;

    const QuadraticForm h = hessian(p.y);
    rep.sigma_in_hessian_radical = (h.gram() * sig).is_zero();

    const SubspaceBasis perp = im_sigma_perp(p);
    rep.complement_contains_Ya = true;
    for (const auto& v : d.basis_Ya)
        if (!perp.contains(v)) rep.complement_contains_Ya = false;

    const QuadraticForm hs = slice_hessian(p, d);
    rep.slice_determinant = hs.dim() == 0 ? Scalar(1) : determinant(hs.gram());
    rep.nondegenerate = !rep.slice_determinant.is_zero();
    return rep;
}

} // namespace qpot

#endif // QPOT_LUNA_HPP
