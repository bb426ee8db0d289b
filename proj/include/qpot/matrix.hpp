#ifndef QPOT_MATRIX_HPP
#define QPOT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpot/error.hpp"
#include "qpot/scalar.hpp"

namespace qpot {

/**
 * Dense row-major matrix over a ring T.
 *
 * T must be default-constructible to its zero and constructible from int
 * (for identities). Used with Scalar for numeric work and with Poly for the
 * polynomial-entry maps of the Koszul complex and the matrix dg-algebras.
 */
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw InputError("ragged matrix literal");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    /// Matrix unit E_ij of the given shape.
    static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
        Matrix m(rows, cols);
        m(i, j) = T(1);
        return m;
    }
    static Matrix column(const std::vector<T>& v) {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Row-major flat view.
    std::span<const T> flat() const { return data_; }
    std::span<T> flat() { return data_; }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw InputError("block out of range");
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw InputError("block out of range");
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o, "+");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o, "-");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& v : data_) v *= s;
        return *this;
    }
    Matrix operator-() const {
        Matrix m(*this);
        for (auto& v : m.data_) v = -v;
        return m;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) {
        for (auto& v : a.data_) v = s * v;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw InputError("matrix product shape mismatch: " + a.shape() + " * " + b.shape());
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    c(i, j) += aik * bkj;
                }
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void check_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw InputError(std::string("matrix shape mismatch in ") + op + ": " + shape() + " vs " + o.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using Vec = std::vector<Scalar>;

template <typename T>
T trace(const Matrix<T>& m) {
    if (!m.is_square()) throw InputError("trace of non-square matrix " + m.shape());
    T t{};
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

/// AB - BA.
template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw InputError("commutator needs square matrices of equal size, got " + a.shape() + " and " + b.shape());
    return a * b - b * a;
}

template <typename T>
Matrix<T> block_diagonal(const std::vector<Matrix<T>>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix<T> m(r, c);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        m.set_block(r0, c0, b);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

/// Stack matrices with equal column counts on top of each other.
template <typename T>
Matrix<T> vstack(const std::vector<Matrix<T>>& parts) {
    std::size_t r = 0;
    std::size_t c = parts.empty() ? 0 : parts.front().cols();
    for (const auto& p : parts) {
        if (p.cols() != c) throw InputError("vstack column mismatch");
        r += p.rows();
    }
    Matrix<T> m(r, c);
    std::size_t r0 = 0;
    for (const auto& p : parts) {
        m.set_block(r0, 0, p);
        r0 += p.rows();
    }
    return m;
}

/// Matrix whose columns are the given vectors (all of length `rows`).
inline ScalarMatrix from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    ScalarMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw InputError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

inline ScalarMatrix from_rows(std::size_t cols, const std::vector<Vec>& rows) {
    ScalarMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InputError("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

inline Vec operator*(const ScalarMatrix& m, const Vec& v) {
    if (m.cols() != v.size()) throw InputError("matrix-vector shape mismatch");
    Vec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    return out;
}

inline bool is_zero(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

/// Bilinear (not sesquilinear) dot product.
inline Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("dot length mismatch");
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

} // namespace qpot

#endif // QPOT_MATRIX_HPP
