#ifndef QPOT_SCALAR_HPP
#define QPOT_SCALAR_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "qpot/error.hpp"

namespace qpot {

/**
 * Exact Gaussian rational re + i*im.
 *
 * This is the ground field for every computation in the library. Both parts
 * are GMP rationals, so arithmetic never rounds. Multiplication takes a fast
 * path when both operands are real, which is the common case.
 */
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {} // NOLINT: implicit from integers is intended
    Scalar(int v) : re_(v) {}  // NOLINT
    Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); } // NOLINT
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar rational(long num, long den) {
        if (den == 0) throw InputError("zero denominator");
        return Scalar(mpq_class(num, den));
    }
    static Scalar imag_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// s * conj(s); always real and nonnegative.
    Scalar norm() const { return Scalar(mpq_class(re_ * re_ + im_ * im_)); }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        if (sgn(o.im_) != 0) im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        if (sgn(o.im_) != 0) im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        if (is_real() && o.is_real()) {
            re_ *= o.re_;
            return *this;
        }
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw InvariantError("division by zero scalar");
        if (o.is_real()) {
            re_ /= o.re_;
            if (sgn(im_) != 0) im_ /= o.re_;
            return *this;
        }
        mpq_class d = o.re_ * o.re_ + o.im_ * o.im_;
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / d;
        mpq_class i = (im_ * o.re_ - re_ * o.im_) / d;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "p/q" for real values, "a+bi" style otherwise (human readable only).
    std::string to_string() const {
        if (is_real()) return re_.get_str();
        std::string s = re_.get_str();
        if (sgn(im_) >= 0) s += "+";
        return s + im_.get_str() + "i";
    }

    /// Parse a rational literal "p", "p/q" (whitespace ignored).
    static mpq_class parse_rational(const std::string& text) {
        std::string t;
        for (char c : text)
            if (c != ' ' && c != '\t') t += c;
        if (t.empty()) throw InputError("empty rational literal");
        if (t[0] == '+') t.erase(0, 1);
        mpq_class q;
        if (q.set_str(t, 10) != 0) throw InputError("malformed rational literal '" + text + "'");
        if (t.find('/') != std::string::npos && q.get_den() == 0)
            throw InputError("zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace qpot

#endif // QPOT_SCALAR_HPP
