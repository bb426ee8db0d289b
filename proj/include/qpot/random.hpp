#ifndef QPOT_RANDOM_HPP
#define QPOT_RANDOM_HPP

#include <cstdint>
#include <random>

#include "qpot/error.hpp"
#include "qpot/matrix.hpp"
#include "qpot/scalar.hpp"

namespace qpot {

/**
 * Seeded source of small exact scalars.
 *
 * std::mt19937_64 output is fixed by the standard, but the std distributions
 * are not, so ranges are reduced by hand to keep draws identical across
 * standard libraries.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here).
    long integer(long lo, long hi) {
        if (hi < lo) throw InputError("empty integer range");
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }

    /// a + bi with a, b integers in [-bound, bound].
    Scalar gaussian_integer(long bound) {
        const long re = integer(-bound, bound);
        const long im = integer(-bound, bound);
        return Scalar(mpq_class(re), mpq_class(im));
    }
    Scalar real_integer(long bound) { return Scalar(integer(-bound, bound)); }

    /// Small rational p/q with |p| <= bound, 1 <= q <= bound.
    Scalar small_rational(long bound) {
        const long p = integer(-bound, bound);
        const long q = integer(1, bound);
        return Scalar(mpq_class(p, q));
    }

    ScalarMatrix gaussian_matrix(std::size_t rows, std::size_t cols, long bound) {
        ScalarMatrix m(rows, cols);
        for (auto& v : m.flat()) v = gaussian_integer(bound);
        return m;
    }
    ScalarMatrix real_matrix(std::size_t rows, std::size_t cols, long bound) {
        ScalarMatrix m(rows, cols);
        for (auto& v : m.flat()) v = real_integer(bound);
        return m;
    }

    /// Random invertible matrix: unipotent lower times upper with nonzero diagonal.
    ScalarMatrix invertible_matrix(std::size_t n, long bound) {
        if (bound < 1) throw InputError("invertible_matrix needs bound >= 1");
        ScalarMatrix lo = ScalarMatrix::identity(n), up(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (j < i) lo(i, j) = gaussian_integer(bound);
                if (j > i) up(i, j) = gaussian_integer(bound);
                if (j == i) {
                    long d = 0;
                    while (d == 0) d = integer(-bound, bound);
                    up(i, j) = Scalar(d);
                }
            }
        return lo * up;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace qpot

#endif // QPOT_RANDOM_HPP
