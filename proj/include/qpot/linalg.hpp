#ifndef QPOT_LINALG_HPP
#define QPOT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qpot/error.hpp"
#include "qpot/matrix.hpp"

namespace qpot {

/// Row echelon form produced by fraction-free elimination.
struct Echelon {
    ScalarMatrix form;                    ///< upper echelon, rows past `rank` are zero
    std::vector<std::size_t> pivot_cols;  ///< pivot column of each nonzero row
    bool odd_permutation = false;         ///< parity of the row swaps performed
    Scalar last_pivot{1};                 ///< Bareiss pivot of the final row (det up to sign)

    std::size_t rank() const { return pivot_cols.size(); }
};

/**
 * Bareiss elimination. Pivot is the first nonzero entry (in row order) of the
 * leftmost column that still has one, so the result is deterministic.
 *
 * Every row update is M_ij <- (p * M_ij - M_ik * M_rj) / p_prev; over a field
 * the division is exact and intermediate entries stay minors of the input,
 * which keeps GMP numbers small.
 */
inline Echelon echelon(ScalarMatrix m) {
    Echelon e;
    const std::size_t rows = m.rows(), cols = m.cols();
    Scalar prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
            e.odd_permutation = !e.odd_permutation;
        }
        const Scalar p = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Scalar f = m(i, c);
            if (f.is_zero()) {
                if (p == prev) continue;
                for (std::size_t j = c + 1; j < cols; ++j)
                    if (!m(i, j).is_zero()) m(i, j) = (p * m(i, j)) / prev;
                continue;
            }
            for (std::size_t j = c + 1; j < cols; ++j) {
                Scalar v = p * m(i, j);
                if (!m(r, j).is_zero()) v -= f * m(r, j);
                if (prev != Scalar(1) && !v.is_zero()) v /= prev;
                m(i, j) = std::move(v);
            }
            m(i, c) = Scalar();
        }
        prev = p;
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.last_pivot = prev;
    e.form = std::move(m);
    return e;
}

inline std::size_t rank(const ScalarMatrix& m) { return echelon(m).rank(); }

/// Exact basis of the right null space; count = cols - rank.
inline std::vector<Vec> kernel_basis(const ScalarMatrix& m) {
    const Echelon e = echelon(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols);
        v[f] = Scalar(1);
        for (std::size_t k = e.rank(); k-- > 0;) {
            const std::size_t pc = e.pivot_cols[k];
            Scalar acc;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!e.form(k, j).is_zero() && !v[j].is_zero()) acc += e.form(k, j) * v[j];
            if (!acc.is_zero()) v[pc] = -acc / e.form(k, pc);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Scalar determinant(const ScalarMatrix& m) {
    if (!m.is_square()) throw InputError("determinant of non-square matrix " + m.shape());
    if (m.rows() == 0) return Scalar(1);
    const Echelon e = echelon(m);
    if (e.rank() < m.rows()) return Scalar();
    return e.odd_permutation ? -e.last_pivot : e.last_pivot;
}

/// Gauss-Jordan inverse; throws InputError on singular input.
inline ScalarMatrix inverse(const ScalarMatrix& m) {
    if (!m.is_square()) throw InputError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    ScalarMatrix a(n, 2 * n);
    a.set_block(0, 0, m);
    a.set_block(0, n, ScalarMatrix::identity(n));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (!a(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) throw InputError("matrix is singular");
        if (piv != c)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(piv, j), a(c, j));
        const Scalar inv = Scalar(1) / a(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            const Scalar f = a(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j)
                if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
        }
    }
    return a.block(0, n, n, n);
}

/// Some x with m x = b, or nullopt if the system is inconsistent.
inline std::optional<Vec> solve(const ScalarMatrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw InputError("solve: rhs length mismatch");
    ScalarMatrix aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < b.size(); ++i) aug(i, m.cols()) = b[i];
    const Echelon e = echelon(aug);
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t k = e.rank(); k-- > 0;) {
        const std::size_t pc = e.pivot_cols[k];
        Scalar acc = e.form(k, m.cols());
        for (std::size_t j = pc + 1; j < m.cols(); ++j)
            if (!e.form(k, j).is_zero() && !x[j].is_zero()) acc -= e.form(k, j) * x[j];
        x[pc] = acc / e.form(k, pc);
    }
    return x;
}

inline bool linearly_independent(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return true;
    return rank(from_columns(ambient_dim, vectors)) == vectors.size();
}

/// Basis of a subspace of C^ambient_dim; independence is verified on construction.
class SubspaceBasis {
public:
    SubspaceBasis(std::size_t ambient_dim, std::vector<Vec> vectors)
        : ambient_dim_(ambient_dim), vectors_(std::move(vectors)) {
        for (const auto& v : vectors_)
            if (v.size() != ambient_dim_) throw InputError("subspace vector has wrong length");
        if (!linearly_independent(ambient_dim_, vectors_))
            throw InputError("subspace basis vectors are linearly dependent");
    }

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return vectors_.size(); }
    const std::vector<Vec>& vectors() const { return vectors_; }

    bool contains(const Vec& v) const {
        if (v.size() != ambient_dim_) throw InputError("vector has wrong length");
        if (is_zero(v)) return true;
        if (vectors_.empty()) return false;
        return solve(from_columns(ambient_dim_, vectors_), v).has_value();
    }

private:
    std::size_t ambient_dim_;
    std::vector<Vec> vectors_;
};

/// Symmetric bilinear form on C^dim; q(v) = v^T gram v.
class QuadraticForm {
public:
    QuadraticForm() = default;
    explicit QuadraticForm(ScalarMatrix gram) : gram_(std::move(gram)) {
        if (!gram_.is_square()) throw InputError("gram matrix must be square");
        if (gram_ != gram_.transpose()) throw InputError("gram matrix must be symmetric");
    }

    std::size_t dim() const { return gram_.rows(); }
    const ScalarMatrix& gram() const { return gram_; }

    Scalar operator()(const Vec& v) const { return bilinear(v, v); }
    Scalar bilinear(const Vec& u, const Vec& v) const { return dot(u, gram_ * v); }

    std::vector<Vec> radical() const { return kernel_basis(gram_); }
    bool nondegenerate() const { return rank(gram_) == dim(); }

private:
    ScalarMatrix gram_;
};

/// Gram matrix of q on span(subspace), in the given basis: B^T G B.
inline QuadraticForm form_restrict(const QuadraticForm& q, const std::vector<Vec>& subspace) {
    for (const auto& v : subspace)
        if (v.size() != q.dim()) throw InputError("form_restrict: vector length differs from form dimension");
    if (!linearly_independent(q.dim(), subspace)) throw InputError("form_restrict: basis is linearly dependent");
    const ScalarMatrix b = from_columns(q.dim(), subspace);
    return QuadraticForm(b.transpose() * q.gram() * b);
}

} // namespace qpot

#endif // QPOT_LINALG_HPP
