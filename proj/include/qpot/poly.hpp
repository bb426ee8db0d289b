#ifndef QPOT_POLY_HPP
#define QPOT_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpot/error.hpp"
#include "qpot/scalar.hpp"

namespace qpot {

/// Exponent vector; trailing zeros are trimmed so equal monomials compare equal.
using Exponents = std::vector<std::uint16_t>;

/// Degree reverse lexicographic order ("greater" monomials come first).
struct DegRevLex {
    static std::uint32_t degree(const Exponents& e) {
        std::uint32_t d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool operator()(const Exponents& a, const Exponents& b) const {
        const auto da = degree(a), db = degree(b);
        if (da != db) return da > db;
        const std::size_t len = std::max(a.size(), b.size());
        for (std::size_t k = len; k-- > 0;) {
            const auto ea = k < a.size() ? a[k] : 0;
            const auto eb = k < b.size() ? b[k] : 0;
            if (ea != eb) return ea < eb;
        }
        return false;
    }
};

/**
 * Sparse commutative polynomial over Scalar in variables indexed 0, 1, 2, ...
 *
 * Variable names live outside the polynomial (see `to_string`), so polys from
 * different call sites combine freely as long as they agree on indices.
 * No zero coefficient is ever stored.
 */
class Poly {
public:
    using Terms = std::map<Exponents, Scalar, DegRevLex>;

    Poly() = default;
    Poly(int c) { add_term({}, Scalar(c)); }         // NOLINT
    Poly(const Scalar& c) { add_term({}, c); }        // NOLINT

    static Poly variable(std::size_t index) {
        Exponents e(index + 1, 0);
        e[index] = 1;
        Poly p;
        p.terms_.emplace(std::move(e), Scalar(1));
        return p;
    }
    static Poly monomial(Exponents e, const Scalar& c = Scalar(1)) {
        Poly p;
        p.add_term(std::move(e), c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Scalar constant_term() const {
        auto it = terms_.find(Exponents{});
        return it == terms_.end() ? Scalar() : it->second;
    }
    std::uint32_t total_degree() const {
        return terms_.empty() ? 0 : DegRevLex::degree(terms_.begin()->first);
    }
    /// Leading coefficient in degrevlex (zero for the zero polynomial).
    Scalar leading_coefficient() const { return terms_.empty() ? Scalar() : terms_.begin()->second; }

    void add_term(Exponents e, const Scalar& c) {
        if (c.is_zero()) return;
        while (!e.empty() && e.back() == 0) e.pop_back();
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly p(*this);
        for (auto& [e, c] : p.terms_) c = -c;
        return p;
    }
    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly& operator*=(const Poly& o) {
        *this = *this * o;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
                for (std::size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Partial derivative with respect to variable `index`.
    Poly derivative(std::size_t index) const {
        Poly r;
        for (const auto& [e, c] : terms_) {
            if (index >= e.size() || e[index] == 0) continue;
            Exponents d = e;
            const long k = d[index];
            d[index] -= 1;
            r.add_term(std::move(d), c * Scalar(k));
        }
        return r;
    }

    /// Evaluate at a point (missing coordinates are treated as zero).
    Scalar evaluate(const std::vector<Scalar>& point) const {
        Scalar total;
        for (const auto& [e, c] : terms_) {
            Scalar t = c;
            for (std::size_t k = 0; k < e.size() && !t.is_zero(); ++k) {
                if (e[k] == 0) continue;
                const Scalar x = k < point.size() ? point[k] : Scalar();
                for (std::uint16_t p = 0; p < e[k]; ++p) t *= x;
            }
            total += t;
        }
        return total;
    }

    /// Highest variable index occurring, plus one.
    std::size_t variable_span() const {
        std::size_t s = 0;
        for (const auto& [e, c] : terms_) s = std::max(s, e.size());
        return s;
    }

    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string coeff = c.is_real() ? c.to_string() : "(" + c.to_string() + ")";
            std::string mono;
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += k < names.size() ? names[k] : "v" + std::to_string(k);
                if (e[k] > 1) mono += "^" + std::to_string(e[k]);
            }
            std::string term;
            if (mono.empty()) term = coeff;
            else if (c == Scalar(1)) term = mono;
            else if (c == Scalar(-1)) term = "-" + mono;
            else term = coeff + "*" + mono;
            if (!first && term[0] != '-') out += "+";
            out += term;
            first = false;
        }
        return out;
    }

private:
    Terms terms_;
};

} // namespace qpot

#endif // QPOT_POLY_HPP
